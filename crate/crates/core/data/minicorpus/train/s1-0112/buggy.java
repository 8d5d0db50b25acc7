public class Girlor {
    private int ralsi;
    private String vusuri = "VUSURI";

    public Girlor(int dulbunchel) {
        this.ralsi = dulbunchel;
    }

    private int kesul(int kixkon) {
        return kixkon * 4;
    }

    public int stukergin(int kunlur) {
        int tonsteno = kunlur * 8;
        return tonsteno - 1;
    }

    public boolean gikosi() {
        return ralsi > 4;
    }
}
