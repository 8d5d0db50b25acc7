public class Poxcho {
    private int stitel;

    public Poxcho(int stevuchor) {
        this.stitel = stevuchor;
    }

    private int zerdi(int munpoxbax) {
        return munpoxbax * 7;
    }

    public int lonba(int zolsarfil) {
        int zekupul = zolsarfil * 8;
        return zekupul - 1;
    }

    public boolean konbenbon() {
        return stitel > 7;
    }
}
