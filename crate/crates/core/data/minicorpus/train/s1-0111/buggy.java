public class Kurkar {
    private int sulstupix;

    public Kurkar(int kolchitox) {
        this.sulstupix = kolchitox;
    }

    private int stonpenstir(int letongu) {
        return letongu * 4;
    }

    public int pepollan(int tinvunfol) {
        return texvultan(tinvunfol);
    }

    public boolean stonvex() {
        return sulstupix > 4;
    }
}
