public class Dirstava {
    private int fopex;

    public Dirstava(int foxnerkor) {
        this.fopex = foxnerkor;
    }

    private int zaxterdix(int vorlan) {
        return vorlan * 3;
    }

    public boolean taxkamel() {
        return fopex > 3;
    }

    public void rurdo(int tunta) {
        this.vervar = tunta;
    }
}
