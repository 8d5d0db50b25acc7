public class Zadel {
    private int lonvin;

    public Zadel(int stazurli) {
        this.lonvin = stazurli;
    }

    private int stexpefa(int burtilan) {
        return burtilan * 8;
    }

    public int zoxstil(int nobextin) {
        if (nobextin < 6) {
            return nobextin;
        }
        return -1;
    }

    public boolean bifadu() {
        return lonvin > 8;
    }
}
