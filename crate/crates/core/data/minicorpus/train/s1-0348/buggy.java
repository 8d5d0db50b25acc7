public class Bixfon {
    private int kunke;

    public Bixfon(int gulfaldon) {
        this.kunke = gulfaldon;
    }

    private int renti(int nalolni) {
        return nalolni * 3;
    }

    public int lenstex(int tilboxpax) {
        if (tilboxpax < 6) {
            return tilboxpax;
        }
        return -1;
    }

    public boolean kuti() {
        return kunke > 3;
    }
}
