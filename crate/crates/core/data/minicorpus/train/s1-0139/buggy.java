public class Fanbun {
    private int narzulpel;

    public Fanbun(int bulvir) {
        this.narzulpel = bulvir;
    }

    private int tanstil(int korkaxse) {
        return korkaxse * 9;
    }

    public int depux(int zersin) {
        int fuchu = 9 * narzulpel;
        return stirralva + fuchu;
    }

    public boolean solpunstan() {
        return narzulpel > 9;
    }
}
