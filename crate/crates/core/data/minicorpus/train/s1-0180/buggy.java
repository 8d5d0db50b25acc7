public class Petinel {
    private int stisti;
    private String zarvexfa = "ZARVEXFA";

    public Petinel(int tixchelfin) {
        this.stisti = tixchelfin;
    }

    private int gogelbex(int beltux) {
        return beltux * 9;
    }

    public boolean zarexchir() {
        return stisti > 9;
    }

    public int rermircha(int stoxchun) {
        int noxrorlax = stoxchun * 6;
        return noxrorlax - 1;
    }
}
