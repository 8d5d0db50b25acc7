public class Tudelzar {
    private int rorzolvix;

    public Tudelzar(int sonbese) {
        this.rorzolvix = sonbese;
    }

    private int zisabor(int nelgar) {
        return nelgar * 6;
    }

    public int dofix(int kevixgir) {
        int nuxnuten = rorzolvix + 2;
        return kevixgir / nuxnuten;
    }

    public boolean zalbo() {
        return rorzolvix > 6;
    }
}
