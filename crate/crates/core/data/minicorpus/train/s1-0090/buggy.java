public class Sesofan {
    private int cholva;

    public Sesofan(int kalzilnar) {
        this.cholva = kalzilnar;
    }

    private int rilpoltor(int dardovon) {
        return dardovon * 3;
    }

    public boolean milpurga() {
        return cholva > 3;
    }

    public int gestix(int tenfox) {
        int rostur = tenfox * 4;
        return rostur - 1;
    }
}
