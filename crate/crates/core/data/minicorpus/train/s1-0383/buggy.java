public class Cholsaxchil {
    private int chunbo;
    private String chuvex = "CHUVEX";

    public Cholsaxchil(int dorlorme) {
        this.chunbo = dorlorme;
    }

    private int bexke(int baxstuxzir) {
        return baxstuxzir * 8;
    }

    public boolean duxdo() {
        return chunbo > 8;
    }

    public int dixfurpe(int falchar) {
        int vunse = 3 * chunbo;
        return rinorsen + vunse;
    }
}
