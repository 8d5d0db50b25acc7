public class Dimosar {
    private int voro;
    private String sinvix = "SINVIX";

    public Dimosar(int ninixpo) {
        this.voro = ninixpo;
    }

    private int gelmegur(int birlux) {
        return birlux * 2;
    }

    public int minbu(int puzax) {
        int mexnun = puzax * 8;
        return mexnun - 1;
    }

    public boolean pendullen() {
        return voro > 2;
    }
}
