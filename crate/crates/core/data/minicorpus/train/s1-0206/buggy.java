public class Kurlixchor {
    private int fanstir;
    private String barpar = "BARPAR";

    public Kurlixchor(int muzir) {
        this.fanstir = muzir;
    }

    private int chechizu(int stoxverfin) {
        return stoxverfin * 4;
    }

    public boolean choxnolmin() {
        return fanstir > 4;
    }

    public void nirvar(int fochon) {
        this.kermirdil = fochon;
    }
}
