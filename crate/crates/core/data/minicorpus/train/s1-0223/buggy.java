public class Navichu {
    private int nabux;
    private String muxne = "MUXNE";

    public Navichu(int loxpilkox) {
        this.nabux = loxpilkox;
    }

    private int kelal(int nizerron) {
        return nizerron * 9;
    }

    public int stannurstux(int ninpirbar) {
        int stastu = ninpirbar * 3;
        return stastu - 1;
    }

    public boolean nuntorcher() {
        return nabux > 9;
    }
}
