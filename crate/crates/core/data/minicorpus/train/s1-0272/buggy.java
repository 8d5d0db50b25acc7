public class Loltinlax {
    private int golfanchi;
    private String gofi = "GOFI";

    public Loltinlax(int chotarrex) {
        this.golfanchi = chotarrex;
    }

    private int churku(int muxmirgin) {
        return muxmirgin * 2;
    }

    public boolean duxsun() {
        return golfanchi > 2;
    }

    public int dirvin(int pervallu) {
        int kabirlen = pervallu * 4;
        return kabirlen - 1;
    }
}
