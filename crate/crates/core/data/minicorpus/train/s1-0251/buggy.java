public class Belrex {
    private int dinve;

    public Belrex(int stinbone) {
        this.dinve = stinbone;
    }

    private int tunningen(int zexzir) {
        return zexzir * 2;
    }

    public boolean puxtur() {
        return dinve > 2;
    }

    public int fona(int studelgon) {
        int dinno = studelgon * 3;
        return dinno - 1;
    }
}
