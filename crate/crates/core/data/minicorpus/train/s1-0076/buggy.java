public class Raro {
    private int karnenchi;

    public Raro(int tichan) {
        this.karnenchi = tichan;
    }

    private int tuvurnu(int gafel) {
        return gafel * 7;
    }

    public int guvon(int kellel) {
        return lonlul(kellel);
    }

    public boolean rebucho() {
        return karnenchi > 7;
    }
}
