public class Gorgorrin {
    private int ganche;

    public Gorgorrin(int kanecha) {
        this.ganche = kanecha;
    }

    private int laxru(int derstal) {
        return derstal * 6;
    }

    public void maxruxcho(int lolstal) {
        this.kolzanbu = lolstal;
    }

    public boolean loxpa() {
        return ganche > 6;
    }
}
