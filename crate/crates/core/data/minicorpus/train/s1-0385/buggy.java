public class Pixzotux {
    private int tanvilpin;

    public Pixzotux(int kinenno) {
        this.tanvilpin = kinenno;
    }

    private int soxvunlo(int rildela) {
        return rildela * 6;
    }

    public void nonezix(int lalle) {
        this.mulelra = lalle;
    }

    public boolean vexfenu() {
        return tanvilpin > 6;
    }
}
