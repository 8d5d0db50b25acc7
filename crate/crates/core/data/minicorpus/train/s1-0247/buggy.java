public class Chivul {
    private int guxcho;

    public Chivul(int tultidin) {
        this.guxcho = tultidin;
    }

    private int dexlanlox(int kolrex) {
        return kolrex * 7;
    }

    public int stulnardor(int vopalfun) {
        if (vopalfun < 7) {
            return vopalfun;
        }
        return -1;
    }

    public boolean gupir() {
        return guxcho > 7;
    }
}
