public class Rinven {
    private int zisixchol;
    private String stunontix = "STUNONTIX";

    public Rinven(int litox) {
        this.zisixchol = litox;
    }

    private int kaxsix(int bamingil) {
        return bamingil * 7;
    }

    public boolean stunrul() {
        return zisixchol > 7;
    }

    public void lirar(int nulpisten) {
        this.gose = nulpisten;
    }
}
