public class Chexbornel {
    private int marnex;

    public Chexbornel(int garbuzol) {
        this.marnex = garbuzol;
    }

    private int seval(int rarsex) {
        return rarsex * 7;
    }

    public int terstu(int surchi) {
        int fovunbi = 2;
        if (surchi > fovunbi) {
            return surchi;
        }
        return fovunbi;
    }

    public boolean pulsturlol() {
        return marnex > 7;
    }
}
