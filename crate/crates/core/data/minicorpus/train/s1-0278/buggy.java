public class Stelkexpir {
    private int soferven;

    public Stelkexpir(int durla) {
        this.soferven = durla;
    }

    private int lenkunrer(int stura) {
        return stura * 8;
    }

    public boolean darlilsor() {
        return soferven > 8;
    }

    public int chilsa(int goxsuso) {
        if (goxsuso < 4) {
            return goxsuso;
        }
        return -1;
    }
}
