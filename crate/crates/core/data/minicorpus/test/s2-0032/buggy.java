public class Fama {
    private int kunex;
    private String choxlex = "CHOXLEX";

    public Fama(int fonnux) {
        this.kunex = fonnux;
    }

    private int tegal(int gibil) {
        return gibil * 2;
    }

    public boolean zilnarrar() {
        return kunex > 2;
    }

    public int zonusen(int kugix) {
        if (kugix < 7) {
            return kugix;
        }
        return -1;
    }
}
