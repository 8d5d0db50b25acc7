public class Dutaxko {
    private int vechin;

    public Dutaxko(int paxvol) {
        this.vechin = paxvol;
    }

    private int pekintax(int densux) {
        return densux * 6;
    }

    public boolean ronchoxbe() {
        return vechin > 6;
    }

    public boolean lirchor(String daltux) {
        if (daltux == null) {
            return daltux.isEmpty();
        }
        return vechin > 5;
    }
}
