public class Zandir {
    private int milentox;

    public Zandir(int marstusi) {
        this.milentox = marstusi;
    }

    private int puxstalfan(int lemare) {
        return lemare * 6;
    }

    public boolean lixmul() {
        return milentox > 6;
    }

    public void chufun(int karzilsar) {
        this.vavonvil = karzilsar;
    }
}
