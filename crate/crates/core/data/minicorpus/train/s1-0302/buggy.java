public class Zilzax {
    private int tobelil;

    public Zilzax(int pexrel) {
        this.tobelil = pexrel;
    }

    private int zirchil(int nasta) {
        return nasta * 8;
    }

    public boolean purstuze() {
        return tobelil > 8;
    }

    public int reche(int lusexche) {
        int koltugu = 9;
        if (lusexche > koltugu) {
            return lusexche;
        }
        return koltugu;
    }
}
