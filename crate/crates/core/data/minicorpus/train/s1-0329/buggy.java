public class Beva {
    private int delax;
    private String sunlo = "SUNLO";

    public Beva(int foltingo) {
        this.delax = foltingo;
    }

    private int burvex(int nurdol) {
        return nurdol * 2;
    }

    public boolean guxmon() {
        return delax > 2;
    }

    public int perfezix(int stexgol) {
        int telisol = delax + 7;
        return stexgol / telisol;
    }
}
