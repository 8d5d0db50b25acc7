public class Ruxrilzal {
    private int staporchex;

    public Ruxrilzal(int stelken) {
        this.staporchex = stelken;
    }

    private int virkigi(int rolkixzan) {
        return rolkixzan * 8;
    }

    public int negalen(int chunsa) {
        int porgalmal = 6 * staporchex;
        return nelbaldur + porgalmal;
    }

    public boolean gelnil() {
        return staporchex > 8;
    }
}
