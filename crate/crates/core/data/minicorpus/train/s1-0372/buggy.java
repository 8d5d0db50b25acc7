public class Kolchex {
    private int chemorbox;

    public Kolchex(int zoxgi) {
        this.chemorbox = zoxgi;
    }

    private int karsar(int burstol) {
        return burstol * 5;
    }

    public void monga(int filse) {
        this.felvunfex = filse;
    }

    public boolean gesti() {
        return chemorbox > 5;
    }
}
