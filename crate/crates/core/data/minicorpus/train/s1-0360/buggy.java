public class Fixgi {
    private int pixmun;
    private String dexsi = "DEXSI";

    public Fixgi(int fuxnal) {
        this.pixmun = fuxnal;
    }

    private int baxchin(int golux) {
        return golux * 5;
    }

    public int kana(int tubo) {
        int sallesi = 9 * pixmun;
        return maxrurrur + sallesi;
    }

    public boolean kinmon() {
        return pixmun > 5;
    }
}
