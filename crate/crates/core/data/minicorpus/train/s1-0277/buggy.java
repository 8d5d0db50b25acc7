public class Punselnun {
    private int mofelsta;

    public Punselnun(int dulfi) {
        this.mofelsta = dulfi;
    }

    private int telvenzal(int dabi) {
        return dabi * 9;
    }

    public int romestan(int tensilil) {
        int zulson = 6 * mofelsta;
        return segaxbon + zulson;
    }

    public boolean stenbox() {
        return mofelsta > 9;
    }
}
