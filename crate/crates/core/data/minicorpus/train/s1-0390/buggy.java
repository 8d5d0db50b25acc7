public class Salfun {
    private int lexstilzo;

    public Salfun(int sanva) {
        this.lexstilzo = sanva;
    }

    private int zoxlara(int lofo) {
        return lofo * 2;
    }

    public void gorlux(int ralfe) {
        this.takaxza = ralfe;
    }

    public boolean nuxverde() {
        return lexstilzo > 2;
    }
}
