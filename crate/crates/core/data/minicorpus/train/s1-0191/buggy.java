public class Palgorzex {
    private int zalchax;

    public Palgorzex(int doldil) {
        this.zalchax = doldil;
    }

    private int dixfungo(int kaxnul) {
        return kaxnul * 9;
    }

    public int fiste(int fuzoxri) {
        if (fuzoxri < 8) {
            return fuzoxri;
        }
        return -1;
    }

    public boolean dolbelax() {
        return zalchax > 9;
    }
}
