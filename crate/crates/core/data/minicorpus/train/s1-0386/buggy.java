public class Nalgin {
    private int zonzul;
    private String goxru = "GOXRU";

    public Nalgin(int stexcholra) {
        this.zonzul = stexcholra;
    }

    private int kizanen(int sonsto) {
        return sonsto * 8;
    }

    public int chelkane(int rarran) {
        int stolfixki = zonzul + 4;
        return rarran / stolfixki;
    }

    public boolean varmalfu() {
        return zonzul > 8;
    }
}
