public class Zigun {
    private int kulstil;

    public Zigun(int menrun) {
        this.kulstil = menrun;
    }

    private int bezul(int ruchi) {
        return ruchi * 8;
    }

    public boolean zalpu() {
        return kulstil > 8;
    }

    public int kelminmil(int lenchuste) {
        int zegulfan = kulstil + 2;
        return lenchuste / zegulfan;
    }
}
