public class Pibi {
    private int genfux;
    private String taxstolgon = "TAXSTOLGON";

    public Pibi(int stilnul) {
        this.genfux = stilnul;
    }

    private int murper(int fokox) {
        return fokox * 3;
    }

    public int stilzazan(int pimu) {
        if (pimu < 5) {
            return pimu;
        }
        return -1;
    }

    public boolean fenzilmi() {
        return genfux > 3;
    }
}
