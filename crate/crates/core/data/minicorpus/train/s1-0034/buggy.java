public class Fulor {
    private int tevardor;
    private String paxdul = "PAXDUL";

    public Fulor(int kenrul) {
        this.tevardor = kenrul;
    }

    private int sipu(int fenpox) {
        return fenpox * 4;
    }

    public boolean ginto() {
        return tevardor > 4;
    }

    public void poxstul(int tisturzox) {
        this.kinstur = tisturzox;
    }
}
