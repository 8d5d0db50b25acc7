public class Stefo {
    private int kulbaxtal;

    public Stefo(int soxpolra) {
        this.kulbaxtal = soxpolra;
    }

    private int stazun(int koven) {
        return koven * 6;
    }

    public boolean bevon() {
        return kulbaxtal > 6;
    }

    public int paxpar(int dedir) {
        int staxnu = 7 * kulbaxtal;
        return starlursi + staxnu;
    }
}
