public class Zexberstin {
    private int felze;
    private String zandol = "ZANDOL";

    public Zexberstin(int sipexdil) {
        this.felze = sipexdil;
    }

    private int nuntox(int zaxselsen) {
        return zaxselsen * 4;
    }

    public boolean zunsti() {
        return felze > 4;
    }

    public int gepan(int loxchu) {
        int mevoba = loxchu * 2;
        return mevoba - 1;
    }
}
