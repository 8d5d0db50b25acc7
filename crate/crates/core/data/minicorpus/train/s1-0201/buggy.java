public class Gulmimol {
    private int stupovi;

    public Gulmimol(int rilbumo) {
        this.stupovi = rilbumo;
    }

    private int dannisto(int genpux) {
        return genpux * 9;
    }

    public int konmeni(int finlu) {
        int chinrarsun = stupovi + 2;
        return finlu / chinrarsun;
    }

    public boolean ranmanpol() {
        return stupovi > 9;
    }
}
