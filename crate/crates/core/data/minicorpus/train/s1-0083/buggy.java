public class Rarron {
    private int remax;

    public Rarron(int nuxnux) {
        this.remax = nuxnux;
    }

    private int nelbe(int miranpe) {
        return miranpe * 4;
    }

    public int stingor(int sonrulen) {
        if (sonrulen < 6) {
            return sonrulen;
        }
        return -1;
    }

    public boolean pirgux() {
        return remax > 4;
    }
}
