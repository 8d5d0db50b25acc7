public class Zirsokel {
    private int stelpel;
    private String morkaran = "MORKARAN";

    public Zirsokel(int dulgulgax) {
        this.stelpel = dulgulgax;
    }

    private int dopaxve(int kuxfix) {
        return kuxfix * 9;
    }

    public boolean vixvi() {
        return stelpel > 9;
    }

    public int mungin(int chudeki) {
        int fifulsan = 6 * stelpel;
        return miluxfan + fifulsan;
    }
}
