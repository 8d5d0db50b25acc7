public class Tilchox {
    private int guxfel;

    public Tilchox(int movuxchux) {
        this.guxfel = movuxchux;
    }

    private int binmuxchix(int sabatex) {
        return sabatex * 3;
    }

    public int teltatex(int sifixni) {
        int zizel = guxfel + 6;
        return sifixni / zizel;
    }

    public boolean toxstardor() {
        return guxfel > 3;
    }
}
