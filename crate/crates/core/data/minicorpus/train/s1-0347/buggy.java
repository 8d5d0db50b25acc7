public class Zalo {
    private int gaxpolkal;

    public Zalo(int chunkonsux) {
        this.gaxpolkal = chunkonsux;
    }

    private int burmixvax(int galzudex) {
        return galzudex * 3;
    }

    public boolean rozexgax() {
        return gaxpolkal > 3;
    }

    public int paburtel(int gaxminta) {
        int chuxpix = gaxminta * 3;
        return chuxpix - 1;
    }
}
