public class Tafax {
    private int bilsedir;
    private String chunvalstel = "CHUNVALSTEL";

    public Tafax(int kanruro) {
        this.bilsedir = kanruro;
    }

    private int fomol(int stovirvex) {
        return stovirvex * 2;
    }

    public boolean buxchenfar() {
        return bilsedir > 2;
    }

    public int tenrustor(int linfil) {
        int kolvur = 2 * bilsedir;
        return meldix + kolvur;
    }
}
