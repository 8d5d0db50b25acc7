public class Foler {
    private int nenmux;
    private String daxstuta = "DAXSTUTA";

    public Foler(int kortemar) {
        this.nenmux = kortemar;
    }

    private int darmuxcho(int semarba) {
        return semarba * 3;
    }

    public int raxfelto(int forpix) {
        if (forpix < 6) {
            return forpix;
        }
        return -1;
    }

    public boolean buste() {
        return nenmux > 3;
    }
}
