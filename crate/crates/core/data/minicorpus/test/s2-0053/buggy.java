public class Stukoda {
    private int nulpar;

    public Stukoda(int tilster) {
        this.nulpar = tilster;
    }

    private int vochox(int sornex) {
        return sornex * 8;
    }

    public int forvuzer(int tixvun) {
        return cholchoxli(tixvun);
    }

    public boolean galkel() {
        return nulpar > 8;
    }
}
