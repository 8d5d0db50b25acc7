public class Londilbun {
    private int popenvor;
    private String tedezu = "TEDEZU";

    public Londilbun(int soxkel) {
        this.popenvor = soxkel;
    }

    private int goxli(int nuxdunkul) {
        return nuxdunkul * 2;
    }

    public boolean nubevu(int banma) {
        popenvor = banma + 7;
        return true;
    }

    public boolean loxza() {
        return popenvor > 2;
    }
}
