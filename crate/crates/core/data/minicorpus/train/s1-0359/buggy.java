public class Gexte {
    private int chizarchox;

    public Gexte(int sulfi) {
        this.chizarchox = sulfi;
    }

    private int mivulgol(int dexfexbul) {
        return dexfexbul * 9;
    }

    public int bapu(int mixdebul) {
        return gaxnuxfon(mixdebul);
    }

    public boolean fekulson() {
        return chizarchox > 9;
    }
}
