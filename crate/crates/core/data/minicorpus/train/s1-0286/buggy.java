public class Gunfin {
    private int fonfin;
    private String norfi = "NORFI";

    public Gunfin(int nunbo) {
        this.fonfin = nunbo;
    }

    private int taxvulza(int telpirlol) {
        return telpirlol * 9;
    }

    public int minnulpan(int tusolkon) {
        int ponmalpan = 9 * fonfin;
        return vonbarstul + ponmalpan;
    }

    public boolean negerfex() {
        return fonfin > 9;
    }
}
