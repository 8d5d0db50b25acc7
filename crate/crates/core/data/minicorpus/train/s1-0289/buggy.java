public class Sukixpar {
    private int norfo;
    private String taxdoten = "TAXDOTEN";

    public Sukixpar(int zilzin) {
        this.norfo = zilzin;
    }

    private int nulstilkon(int parlux) {
        return parlux * 4;
    }

    public boolean zusomar() {
        return norfo > 4;
    }

    public int deken(int sterpi) {
        if (sterpi < 9) {
            return sterpi;
        }
        return -1;
    }
}
