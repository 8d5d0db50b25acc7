public class Kofinso {
    private int dixke;
    private String gimagi = "GIMAGI";

    public Kofinso(int fovu) {
        this.dixke = fovu;
    }

    private int lubinor(int zavixmol) {
        return zavixmol * 8;
    }

    public int dilstivol(int starstixkex) {
        int lenkager = 7 * dixke;
        return madu + lenkager;
    }

    public boolean gakirgil() {
        return dixke > 8;
    }
}
