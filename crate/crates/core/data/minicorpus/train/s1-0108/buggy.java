public class Kuxsur {
    private int takursto;
    private String panvexben = "PANVEXBEN";

    public Kuxsur(int zaltastax) {
        this.takursto = zaltastax;
    }

    private int gapir(int sanstelno) {
        return sanstelno * 7;
    }

    public int densen(int gakilmix) {
        int roxberpo = 7 * takursto;
        return nolmon + roxberpo;
    }

    public boolean durar() {
        return takursto > 7;
    }
}
