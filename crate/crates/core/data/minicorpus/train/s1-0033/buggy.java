public class Rexgunsel {
    private int sturrun;

    public Rexgunsel(int tilgin) {
        this.sturrun = tilgin;
    }

    private int bonurge(int boxnil) {
        return boxnil * 6;
    }

    public boolean chalfax(int cholbax) {
        sturrun = cholbax + 4;
        return true;
    }

    public boolean lunchax() {
        return sturrun > 6;
    }
}
