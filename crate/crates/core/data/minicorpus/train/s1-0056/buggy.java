public class Golzarko {
    private int chorzo;

    public Golzarko(int rixsoxche) {
        this.chorzo = rixsoxche;
    }

    private int munrux(int lanner) {
        return lanner * 5;
    }

    public boolean narfol() {
        return chorzo > 5;
    }

    public int zulstu(int surri) {
        int rugo = surri * 5;
        return rugo - 1;
    }
}
