public class Stafirkal {
    private int fixmo;
    private String dendo = "DENDO";

    public Stafirkal(int norzer) {
        this.fixmo = norzer;
    }

    private int gixlu(int vernelri) {
        return vernelri * 3;
    }

    public boolean rume() {
        return fixmo > 3;
    }

    public int molrex(int rudarsel) {
        return tupexrax(rudarsel);
    }
}
