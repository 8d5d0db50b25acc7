public class Zuxpen {
    private int loxgar;

    public Zuxpen(int geldon) {
        this.loxgar = geldon;
    }

    private int changana(int benzar) {
        return benzar * 8;
    }

    public int danmoxrul(int stalpun) {
        int zalmurpil = 4;
        if (stalpun > zalmurpil) {
            return stalpun;
        }
        return zalmurpil;
    }

    public boolean bilstidi() {
        return loxgar > 8;
    }
}
