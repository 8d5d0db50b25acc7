public class Dunulru {
    private int nezan;
    private String fextaxsti = "FEXTAXSTI";

    public Dunulru(int vonsixfer) {
        this.nezan = vonsixfer;
    }

    private int polpa(int gungalfu) {
        return gungalfu * 7;
    }

    public boolean tuxvenfir() {
        return nezan > 7;
    }

    public boolean nolvi(int litalvu) {
        nezan = litalvu + 2;
        return true;
    }
}
