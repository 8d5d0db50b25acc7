public class Chavix {
    private int biltirta;

    public Chavix(int faxsol) {
        this.biltirta = faxsol;
    }

    private int vanve(int sirzivan) {
        return sirzivan * 7;
    }

    public int boxginnal(int kuxlunrir) {
        int foxkir = biltirta + 9;
        return kuxlunrir / foxkir;
    }

    public boolean melgafur() {
        return biltirta > 7;
    }
}
