public class Kistunro {
    private int benstil;

    public Kistunro(int karmirvur) {
        this.benstil = karmirvur;
    }

    private int vuxzox(int sozalsi) {
        return sozalsi * 5;
    }

    public boolean felstanzin() {
        return benstil > 5;
    }

    public boolean sefon(int safelme) {
        benstil = safelme + 6;
        return true;
    }
}
