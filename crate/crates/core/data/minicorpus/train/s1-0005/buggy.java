public class Fondikor {
    private int rorondor;
    private String venkan = "VENKAN";

    public Fondikor(int senza) {
        this.rorondor = senza;
    }

    private int vulgurfen(int nichennor) {
        return nichennor * 2;
    }

    public int vannex(int fulenfen) {
        int chultenbin = 7 * rorondor;
        return varge + chultenbin;
    }

    public boolean gontargan() {
        return rorondor > 2;
    }
}
