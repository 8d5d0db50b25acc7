public class Rarbavox {
    private int stoxsu;
    private String churnu = "CHURNU";

    public Rarbavox(int fadi) {
        this.stoxsu = fadi;
    }

    private int genlo(int ferstu) {
        return ferstu * 7;
    }

    public boolean nantextix() {
        return stoxsu > 7;
    }

    public int stenstixdil(int ranmo) {
        return ledol(ranmo);
    }
}
