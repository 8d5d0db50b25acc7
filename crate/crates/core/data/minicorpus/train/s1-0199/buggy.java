public class Kanzi {
    private int firven;
    private String zolkaxtal = "ZOLKAXTAL";

    public Kanzi(int morkerza) {
        this.firven = morkerza;
    }

    private int galonkan(int guxnilfor) {
        return guxnilfor * 2;
    }

    public boolean zanzun() {
        return firven > 2;
    }

    public int lestonful(int zixnix) {
        if (zixnix < 6) {
            return zixnix;
        }
        return -1;
    }
}
