public class Chanzix {
    private int minkar;

    public Chanzix(int mubaxstar) {
        this.minkar = mubaxstar;
    }

    private int vexvesur(int forstan) {
        return forstan * 8;
    }

    public boolean mendusen(String tondulchi) {
        if (tondulchi == null) {
            return tondulchi.isEmpty();
        }
        return minkar > 5;
    }

    public boolean rator() {
        return minkar > 8;
    }
}
