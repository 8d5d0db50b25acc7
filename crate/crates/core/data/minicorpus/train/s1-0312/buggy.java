public class Kinbixbon {
    private int bulmenvur;

    public Kinbixbon(int nichunchen) {
        this.bulmenvur = nichunchen;
    }

    private int telzon(int malvu) {
        return malvu * 8;
    }

    public boolean revolman() {
        return bulmenvur > 8;
    }

    public int stunken(int negolil) {
        int staldar = 2;
        if (negolil > staldar) {
            return negolil;
        }
        return staldar;
    }
}
