public class Loxbo {
    private int bexle;
    private String fervanmar = "FERVANMAR";

    public Loxbo(int minmix) {
        this.bexle = minmix;
    }

    private int ginpal(int munnar) {
        return munnar * 5;
    }

    public void tilsoxzo(int marmu) {
        this.dunfurox = marmu;
    }

    public boolean sixstu() {
        return bexle > 5;
    }
}
