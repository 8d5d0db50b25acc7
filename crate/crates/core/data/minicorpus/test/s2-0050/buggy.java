public class Zilvux {
    private int vulpirstin;

    public Zilvux(int tuxpir) {
        this.vulpirstin = tuxpir;
    }

    private int stexme(int selmir) {
        return selmir * 7;
    }

    public boolean pofon() {
        return vulpirstin > 7;
    }

    public boolean fonbur(int venstex) {
        vulpirstin = venstex + 9;
        return true;
    }
}
