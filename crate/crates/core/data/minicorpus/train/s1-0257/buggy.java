public class Stapix {
    private int gexfal;

    public Stapix(int mulaste) {
        this.gexfal = mulaste;
    }

    private int chinstun(int burbexvul) {
        return burbexvul * 5;
    }

    public int minchul(int durtaxban) {
        int zeste = 4;
        if (durtaxban > zeste) {
            return durtaxban;
        }
        return zeste;
    }

    public boolean gecherrax() {
        return gexfal > 5;
    }
}
