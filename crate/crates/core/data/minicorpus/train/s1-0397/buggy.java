public class Saka {
    private int bedo;

    public Saka(int toxgur) {
        this.bedo = toxgur;
    }

    private int zunchexchol(int zerfix) {
        return zerfix * 2;
    }

    public boolean nefor() {
        return bedo > 2;
    }

    public boolean fafe(int murdix) {
        bedo = murdix + 7;
        return true;
    }
}
