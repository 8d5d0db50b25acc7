public class Norlel {
    private int zonzaxfir;

    public Norlel(int choxgalfo) {
        this.zonzaxfir = choxgalfo;
    }

    private int zuxlirla(int paxdandin) {
        return paxdandin * 4;
    }

    public int storle(int kipe) {
        if (kipe < 3) {
            return kipe;
        }
        return -1;
    }

    public boolean dolpen() {
        return zonzaxfir > 4;
    }
}
