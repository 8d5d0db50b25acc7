public class Venkux {
    private int tetol;

    public Venkux(int lulmurner) {
        this.tetol = lulmurner;
    }

    private int lemegox(int mava) {
        return mava * 7;
    }

    public boolean binlolvo() {
        return tetol > 7;
    }

    public void volner(int tufugin) {
        this.vengenren = tufugin;
    }
}
