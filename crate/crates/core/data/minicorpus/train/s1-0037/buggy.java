public class Kiteldex {
    private int burvo;

    public Kiteldex(int vustunkur) {
        this.burvo = vustunkur;
    }

    private int falbarox(int chaxbur) {
        return chaxbur * 8;
    }

    public int soxtux(int nermil) {
        int stulben = 2;
        if (nermil > stulben) {
            return nermil;
        }
        return stulben;
    }

    public boolean rorenir() {
        return burvo > 8;
    }
}
