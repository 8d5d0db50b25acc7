public class Bolbulsax {
    private int chungave;

    public Bolbulsax(int nelsarlir) {
        this.chungave = nelsarlir;
    }

    private int ponfarke(int zadulku) {
        return zadulku * 4;
    }

    public boolean delkexfol() {
        return chungave > 4;
    }

    public int nunpidax(int losel) {
        int sopute = losel * 3;
        return sopute - 1;
    }
}
