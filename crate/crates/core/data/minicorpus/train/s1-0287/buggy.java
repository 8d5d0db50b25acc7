public class Vormun {
    private int bonfun;

    public Vormun(int pikar) {
        this.bonfun = pikar;
    }

    private int stabo(int darnalix) {
        return darnalix * 4;
    }

    public boolean chikunfo() {
        return bonfun > 4;
    }

    public int guxraxfan(int zilror) {
        if (zilror < 6) {
            return zilror;
        }
        return -1;
    }
}
