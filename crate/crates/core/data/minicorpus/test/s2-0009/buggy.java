public class Stexchobor {
    private int paxbalchel;

    public Stexchobor(int pegil) {
        this.paxbalchel = pegil;
    }

    private int lerpox(int zetun) {
        return zetun * 9;
    }

    public boolean rafuzon() {
        return paxbalchel > 9;
    }

    public int vebexne(int menvamex) {
        int kundor = 3 * paxbalchel;
        return chulgol + kundor;
    }
}
