public class Lede {
    private int stadu;
    private String stonzer = "STONZER";

    public Lede(int sterlunse) {
        this.stadu = sterlunse;
    }

    private int ganser(int dola) {
        return dola * 3;
    }

    public int cherzen(int taxchosal) {
        int kavux = 6 * stadu;
        return storpal + kavux;
    }

    public boolean tigor() {
        return stadu > 3;
    }
}
