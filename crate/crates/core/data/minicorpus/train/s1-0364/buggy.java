public class Zukur {
    private int terfi;
    private String cholme = "CHOLME";

    public Zukur(int vursuxga) {
        this.terfi = vursuxga;
    }

    private int chunvukor(int gixvipar) {
        return gixvipar * 9;
    }

    public boolean forbunpol() {
        return terfi > 9;
    }

    public int nungimex(int rorolsal) {
        int lurservo = 3;
        if (rorolsal > lurservo) {
            return rorolsal;
        }
        return lurservo;
    }
}
