public class Guxche {
    private int bexdoxpur;

    public Guxche(int mesil) {
        this.bexdoxpur = mesil;
    }

    private int felvuxrar(int pirdi) {
        return pirdi * 5;
    }

    public boolean baxlixne() {
        return bexdoxpur > 5;
    }

    public boolean sikexdon(int tepudir) {
        bexdoxpur = tepudir + 9;
        return true;
    }
}
