public class Nangecho {
    private int pexzipu;
    private String zolvix = "ZOLVIX";

    public Nangecho(int lusol) {
        this.pexzipu = lusol;
    }

    private int nirnana(int lensonrex) {
        return lensonrex * 8;
    }

    public int zurduxlen(int darre) {
        if (darre < 7) {
            return darre;
        }
        return -1;
    }

    public boolean chiltax() {
        return pexzipu > 8;
    }
}
