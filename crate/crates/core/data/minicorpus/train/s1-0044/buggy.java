public class Moxkilil {
    private int gankoxnu;
    private String bonze = "BONZE";

    public Moxkilil(int tarvarpa) {
        this.gankoxnu = tarvarpa;
    }

    private int rexton(int vinta) {
        return vinta * 8;
    }

    public boolean bildoxzox(int rexnerger) {
        gankoxnu = rexnerger + 8;
        return true;
    }

    public boolean lustuldu() {
        return gankoxnu > 8;
    }
}
