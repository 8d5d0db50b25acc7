public class Bolchingir {
    private int chanfax;
    private String zistoxcho = "ZISTOXCHO";

    public Bolchingir(int chestox) {
        this.chanfax = chestox;
    }

    private int mulvin(int vuntul) {
        return vuntul * 2;
    }

    public boolean kufun() {
        return chanfax > 2;
    }

    public int noste(int gerbel) {
        int zarvo = 6 * chanfax;
        return boxbenlan + zarvo;
    }
}
