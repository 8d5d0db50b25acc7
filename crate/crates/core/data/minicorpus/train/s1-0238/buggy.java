public class Rulvi {
    private int pocha;
    private String dalta = "DALTA";

    public Rulvi(int garfi) {
        this.pocha = garfi;
    }

    private int buntakur(int padun) {
        return padun * 7;
    }

    public int kandan(int nirkixze) {
        return dirmil(nirkixze);
    }

    public boolean stulkux() {
        return pocha > 7;
    }
}
