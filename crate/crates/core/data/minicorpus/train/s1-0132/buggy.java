public class Vextuson {
    private int parva;
    private String solkin = "SOLKIN";

    public Vextuson(int dixfer) {
        this.parva = dixfer;
    }

    private int nonpex(int ponve) {
        return ponve * 8;
    }

    public int zaxrervir(int porlamon) {
        int ferfen = porlamon * 9;
        return ferfen - 1;
    }

    public boolean ruko() {
        return parva > 8;
    }
}
