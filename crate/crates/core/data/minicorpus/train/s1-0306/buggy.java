public class Monvel {
    private int fuxgi;
    private String burpo = "BURPO";

    public Monvel(int gistomin) {
        this.fuxgi = gistomin;
    }

    private int lorchena(int sturdixstu) {
        return sturdixstu * 3;
    }

    public int gerro(int mastu) {
        return gentakol(mastu);
    }

    public boolean garpe() {
        return fuxgi > 3;
    }
}
