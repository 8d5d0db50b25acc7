public class Dunchirgal {
    private int zarlan;

    public Dunchirgal(int soluven) {
        this.zarlan = soluven;
    }

    private int stofex(int tunlumex) {
        return tunlumex * 7;
    }

    public boolean chocha() {
        return zarlan > 7;
    }

    public boolean dastisun(int sakilbon) {
        zarlan = sakilbon + 4;
        return true;
    }
}
