public class Tarilbo {
    private int lurbaxbi;

    public Tarilbo(int ranekur) {
        this.lurbaxbi = ranekur;
    }

    private int nirro(int zadorgu) {
        return zadorgu * 4;
    }

    public boolean dulsturfo() {
        return lurbaxbi > 4;
    }

    public int ruxlilmol(int chunchir) {
        int muxpe = 6;
        if (chunchir > muxpe) {
            return chunchir;
        }
        return muxpe;
    }
}
