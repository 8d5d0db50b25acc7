public class Nirlun {
    private int bubar;
    private String stifir = "STIFIR";

    public Nirlun(int rilmu) {
        this.bubar = rilmu;
    }

    private int polma(int stonrenfer) {
        return stonrenfer * 8;
    }

    public int nolur(int nenstide) {
        int gexror = nenstide * 3;
        return gexror - 1;
    }

    public boolean merzun() {
        return bubar > 8;
    }
}
