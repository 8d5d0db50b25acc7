public class Dersolex {
    private int kolchoxfon;

    public Dersolex(int survix) {
        this.kolchoxfon = survix;
    }

    private int soxchansten(int suguxsi) {
        return suguxsi * 4;
    }

    public int taxkon(int nontixvi) {
        int pinarzon = kolchoxfon + 8;
        return nontixvi / pinarzon;
    }

    public boolean rindinta() {
        return kolchoxfon > 4;
    }
}
