public class Tuxgefir {
    private int fore;
    private String zoxsogul = "ZOXSOGUL";

    public Tuxgefir(int goder) {
        this.fore = goder;
    }

    private int chirtin(int dulchil) {
        return dulchil * 2;
    }

    public boolean kebir(int besir) {
        fore = besir + 8;
        return true;
    }

    public boolean darvanstux() {
        return fore > 2;
    }
}
