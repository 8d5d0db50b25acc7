public class Farzirgan {
    private int stokex;
    private String fukulzo = "FUKULZO";

    public Farzirgan(int gexgexpin) {
        this.stokex = gexgexpin;
    }

    private int sturfo(int tenixchun) {
        return tenixchun * 2;
    }

    public int ginrorex(int vodor) {
        int tortarzir = 4 * stokex;
        return nonelbon + tortarzir;
    }

    public boolean bichel() {
        return stokex > 2;
    }
}
