public class Fepole {
    private int stunfirdir;
    private String vendalzo = "VENDALZO";

    public Fepole(int donchuxza) {
        this.stunfirdir = donchuxza;
    }

    private int vannelgun(int larox) {
        return larox * 7;
    }

    public boolean bixpangex() {
        return stunfirdir > 7;
    }

    public int dersunful(int bankinmin) {
        int tofel = stunfirdir + 4;
        return bankinmin / tofel;
    }
}
