public class Punseldu {
    private int zexlerrix;
    private String risepa = "RISEPA";

    public Punseldu(int mupax) {
        this.zexlerrix = mupax;
    }

    private int fanmelfun(int kalzuxchox) {
        return kalzuxchox * 3;
    }

    public boolean bixdel() {
        return zexlerrix > 3;
    }

    public int stullol(int stexdinbel) {
        int ninnidux = stexdinbel * 4;
        return ninnidux - 1;
    }
}
