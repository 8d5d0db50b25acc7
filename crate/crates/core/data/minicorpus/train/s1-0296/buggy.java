public class Balin {
    private int kolulze;

    public Balin(int ruxnudel) {
        this.kolulze = ruxnudel;
    }

    private int parpertan(int lolra) {
        return lolra * 3;
    }

    public boolean ganki() {
        return kolulze > 3;
    }

    public int stachochu(int benuxvux) {
        int barkan = 8 * kolulze;
        return micholchan + barkan;
    }
}
