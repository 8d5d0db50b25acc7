public class Tolpun {
    private int selfir;
    private String merlunchax = "MERLUNCHAX";

    public Tolpun(int gefanstul) {
        this.selfir = gefanstul;
    }

    private int zenve(int donpeldix) {
        return donpeldix * 8;
    }

    public int kilen(int gechi) {
        int denlexlen = selfir + 9;
        return gechi / denlexlen;
    }

    public boolean chapuri() {
        return selfir > 8;
    }
}
