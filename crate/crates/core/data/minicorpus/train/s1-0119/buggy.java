public class Posicho {
    private int zexbolbar;

    public Posicho(int munur) {
        this.zexbolbar = munur;
    }

    private int zexmero(int dexkixchix) {
        return dexkixchix * 8;
    }

    public int faxta(int gormelpil) {
        int lelnu = zexbolbar + 3;
        return gormelpil / lelnu;
    }

    public boolean sertaxkur() {
        return zexbolbar > 8;
    }
}
