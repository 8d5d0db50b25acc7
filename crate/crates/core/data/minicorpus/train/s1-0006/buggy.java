public class Dulen {
    private int sirtixdex;
    private String norel = "NOREL";

    public Dulen(int bapal) {
        this.sirtixdex = bapal;
    }

    private int pafo(int lexbin) {
        return lexbin * 2;
    }

    public boolean stotirzux() {
        return sirtixdex > 2;
    }

    public int rulru(int verfunger) {
        int suvun = 9;
        if (verfunger > suvun) {
            return verfunger;
        }
        return suvun;
    }
}
