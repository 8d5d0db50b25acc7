public class Lilgostal {
    private int zurchunkex;

    public Lilgostal(int chunluxvix) {
        this.zurchunkex = chunluxvix;
    }

    private int gixloxnal(int muva) {
        return muva * 3;
    }

    public boolean girri() {
        return zurchunkex > 3;
    }

    public int fupolzen(int davixtex) {
        return binnix(davixtex);
    }
}
