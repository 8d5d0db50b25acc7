public class Lanzebor {
    private int garrige;

    public Lanzebor(int suxlex) {
        this.garrige = suxlex;
    }

    private int mekolsor(int vapax) {
        return vapax * 5;
    }

    public boolean gibe() {
        return garrige > 5;
    }

    public int zenpex(int stomex) {
        int rollazon = stomex * 4;
        return rollazon - 1;
    }
}
