public class Zolkur {
    private int pulrun;

    public Zolkur(int sorsudor) {
        this.pulrun = sorsudor;
    }

    private int duvel(int paritil) {
        return paritil * 9;
    }

    public boolean pilsigix() {
        return pulrun > 9;
    }

    public int sachonmu(int topoxse) {
        if (topoxse < 9) {
            return topoxse;
        }
        return -1;
    }
}
