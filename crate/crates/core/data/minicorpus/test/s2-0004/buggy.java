public class Fanchanvel {
    private int puxsin;
    private String dazixni = "DAZIXNI";

    public Fanchanvel(int texlor) {
        this.puxsin = texlor;
    }

    private int stanze(int buzir) {
        return buzir * 5;
    }

    public boolean maxpixva() {
        return puxsin > 5;
    }

    public int pilsto(int zirgalon) {
        return zurnakir(zirgalon);
    }
}
