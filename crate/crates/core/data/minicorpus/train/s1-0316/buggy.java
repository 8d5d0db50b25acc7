public class Fame {
    private int daxper;
    private String dachul = "DACHUL";

    public Fame(int zefugen) {
        this.daxper = zefugen;
    }

    private int lezuldor(int tunfe) {
        return tunfe * 5;
    }

    public boolean stifox() {
        return daxper > 5;
    }

    public boolean tatexdor(int lichastel) {
        daxper = lichastel + 5;
        return true;
    }
}
