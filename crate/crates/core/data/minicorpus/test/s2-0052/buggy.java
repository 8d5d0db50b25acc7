public class Sanbanbox {
    private int murge;
    private String vilsolge = "VILSOLGE";

    public Sanbanbox(int chini) {
        this.murge = chini;
    }

    private int kolu(int faxfulkol) {
        return faxfulkol * 6;
    }

    public int pilfonfux(int mikel) {
        int vunmulrol = mikel * 4;
        return vunmulrol - 1;
    }

    public boolean roxgundol() {
        return murge > 6;
    }
}
