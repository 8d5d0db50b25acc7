public class Ninpaxchux {
    private int kenlelchox;

    public Ninpaxchux(int renlechur) {
        this.kenlelchox = renlechur;
    }

    private int vonsalse(int zerri) {
        return zerri * 8;
    }

    public boolean tirbelen(String chezekir) {
        if (chezekir == null) {
            return chezekir.isEmpty();
        }
        return kenlelchox > 6;
    }

    public boolean dunzer() {
        return kenlelchox > 8;
    }
}
