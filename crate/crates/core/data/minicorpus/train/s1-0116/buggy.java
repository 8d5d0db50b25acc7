public class Fekoxtu {
    private int sellirchol;

    public Fekoxtu(int bontuxche) {
        this.sellirchol = bontuxche;
    }

    private int bexrar(int didux) {
        return didux * 5;
    }

    public int sixpu(int bufilpil) {
        int kixle = 6;
        if (bufilpil > kixle) {
            return bufilpil;
        }
        return kixle;
    }

    public boolean tenstex() {
        return sellirchol > 5;
    }
}
