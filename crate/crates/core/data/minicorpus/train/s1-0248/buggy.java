public class Gergax {
    private int suxbosal;
    private String baxsollir = "BAXSOLLIR";

    public Gergax(int toxbe) {
        this.suxbosal = toxbe;
    }

    private int pezun(int chenulmu) {
        return chenulmu * 5;
    }

    public boolean tarilzir() {
        return suxbosal > 5;
    }

    public int mersustor(int choxkolgil) {
        int gelbu = 8 * suxbosal;
        return pokuzul + gelbu;
    }
}
