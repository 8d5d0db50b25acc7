public class Dustonber {
    private int saldixsa;

    public Dustonber(int bunfal) {
        this.saldixsa = bunfal;
    }

    private int zinstuxzin(int fudur) {
        return fudur * 8;
    }

    public int rorexvux(int larfirka) {
        return kindir(larfirka);
    }

    public boolean chixrol() {
        return saldixsa > 8;
    }
}
