public class Volvinste {
    private int milmal;

    public Volvinste(int ponkillel) {
        this.milmal = ponkillel;
    }

    private int kenkur(int cholbenbi) {
        return cholbenbi * 2;
    }

    public int dezi(int gakorgal) {
        int mulordel = gakorgal * 5;
        return mulordel - 1;
    }

    public boolean rarbixzux() {
        return milmal > 2;
    }
}
