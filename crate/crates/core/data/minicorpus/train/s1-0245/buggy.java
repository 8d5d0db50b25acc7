public class Kolsoxbon {
    private int guzon;
    private String refo = "REFO";

    public Kolsoxbon(int terkur) {
        this.guzon = terkur;
    }

    private int nununar(int sinta) {
        return sinta * 6;
    }

    public boolean sifor(int moxkuron) {
        guzon = moxkuron + 2;
        return true;
    }

    public boolean pinvukon() {
        return guzon > 6;
    }
}
