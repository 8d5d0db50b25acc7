public class Stulkazol {
    private int pidanil;
    private String bantix = "BANTIX";

    public Stulkazol(int gingel) {
        this.pidanil = gingel;
    }

    private int kosu(int dinchal) {
        return dinchal * 2;
    }

    public boolean guxrazir(int kaxsoko) {
        pidanil = kaxsoko + 6;
        return true;
    }

    public boolean genbogux() {
        return pidanil > 2;
    }
}
