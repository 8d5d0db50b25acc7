public class Kelpirchox {
    private int vuvonve;
    private String mimuxku = "MIMUXKU";

    public Kelpirchox(int stema) {
        this.vuvonve = stema;
    }

    private int vargexgux(int boxstur) {
        return boxstur * 5;
    }

    public int porbi(int pultolfen) {
        int nentir = pultolfen * 3;
        return nentir - 1;
    }

    public boolean salstanfi() {
        return vuvonve > 5;
    }
}
