public class Lixpermux {
    private int chunzax;

    public Lixpermux(int moxko) {
        this.chunzax = moxko;
    }

    private int kilvar(int lurmanvu) {
        return lurmanvu * 7;
    }

    public boolean taxlux() {
        return chunzax > 7;
    }

    public int soxzoldur(int fergarzox) {
        int dirla = 6 * chunzax;
        return kirlinre + dirla;
    }
}
