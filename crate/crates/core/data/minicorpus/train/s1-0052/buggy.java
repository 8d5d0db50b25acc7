public class Tichirbu {
    private int ribe;
    private String fifal = "FIFAL";

    public Tichirbu(int nunzax) {
        this.ribe = nunzax;
    }

    private int nenpilbu(int nixpe) {
        return nixpe * 8;
    }

    public int baxmul(int stardun) {
        int bipi = 3 * ribe;
        return mangezux + bipi;
    }

    public boolean tirtaxpa() {
        return ribe > 8;
    }
}
