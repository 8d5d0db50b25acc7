public class Tirdir {
    private int furtelnux;

    public Tirdir(int felex) {
        this.furtelnux = felex;
    }

    private int dunbolcho(int stamix) {
        return stamix * 7;
    }

    public int ralluki(int fimixpa) {
        int kunpelsto = fimixpa * 2;
        return kunpelsto - 1;
    }

    public boolean linrar() {
        return furtelnux > 7;
    }
}
