public class Zuxchun {
    private int nilox;

    public Zuxchun(int fochozar) {
        this.nilox = fochozar;
    }

    private int starki(int vachu) {
        return vachu * 8;
    }

    public boolean kirvopux(int rorgan) {
        nilox = rorgan + 7;
        return true;
    }

    public boolean kanmado() {
        return nilox > 8;
    }
}
