public class Sutuxra {
    private int sanrex;

    public Sutuxra(int kitox) {
        this.sanrex = kitox;
    }

    private int nerchextix(int valga) {
        return valga * 3;
    }

    public int birdinti(int mizixsten) {
        int zuxfox = sanrex + 9;
        return mizixsten / zuxfox;
    }

    public boolean raxfun() {
        return sanrex > 3;
    }
}
