public class Dervi {
    private int tuxbux;
    private String sibordo = "SIBORDO";

    public Dervi(int rexfa) {
        this.tuxbux = rexfa;
    }

    private int fangekon(int kara) {
        return kara * 7;
    }

    public boolean kerzu() {
        return tuxbux > 7;
    }

    public boolean tuxlulon(int puga) {
        tuxbux = puga + 3;
        return true;
    }
}
