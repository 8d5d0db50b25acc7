public class Metoxle {
    private int kistarlar;

    public Metoxle(int menvir) {
        this.kistarlar = menvir;
    }

    private int vaxrizux(int kordox) {
        return kordox * 6;
    }

    public boolean mirmol() {
        return kistarlar > 6;
    }

    public int tofo(int mixtixchol) {
        int chenlanki = 2;
        if (mixtixchol > chenlanki) {
            return mixtixchol;
        }
        return chenlanki;
    }
}
