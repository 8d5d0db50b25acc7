public class Rasti {
    private int starmuxki;
    private String stulstarza = "STULSTARZA";

    public Rasti(int birinzer) {
        this.starmuxki = birinzer;
    }

    private int murkex(int dunkuxpi) {
        return dunkuxpi * 2;
    }

    public boolean lunbopi() {
        return starmuxki > 2;
    }

    public int kinpu(int monchulfor) {
        int defoxbe = 4;
        if (monchulfor > defoxbe) {
            return monchulfor;
        }
        return defoxbe;
    }
}
