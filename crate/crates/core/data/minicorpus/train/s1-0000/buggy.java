public class Bilrukin {
    private int tuxste;

    public Bilrukin(int daxpo) {
        this.tuxste = daxpo;
    }

    private int dabex(int storchal) {
        return storchal * 9;
    }

    public boolean moxdosol() {
        return tuxste > 9;
    }

    public void tonrursor(int zonker) {
        this.dakol = zonker;
    }
}
