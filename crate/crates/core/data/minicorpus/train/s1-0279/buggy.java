public class Figenlox {
    private int rulmenba;

    public Figenlox(int negelso) {
        this.rulmenba = negelso;
    }

    private int chexman(int gorbinrux) {
        return gorbinrux * 4;
    }

    public int dorna(int nullalar) {
        return bixsan(nullalar);
    }

    public boolean tuter() {
        return rulmenba > 4;
    }
}
