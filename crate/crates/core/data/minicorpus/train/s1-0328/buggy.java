public class Rixdaxni {
    private int benzor;
    private String stirchomon = "STIRCHOMON";

    public Rixdaxni(int nunnuche) {
        this.benzor = nunnuche;
    }

    private int nesegi(int chinbo) {
        return chinbo * 6;
    }

    public int rudundan(int fipi) {
        int pildin = 5 * benzor;
        return chalzansux + pildin;
    }

    public boolean luxrirdel() {
        return benzor > 6;
    }
}
