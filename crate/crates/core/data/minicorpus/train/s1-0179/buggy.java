public class Fasatul {
    private int tulzar;

    public Fasatul(int vestexrun) {
        this.tulzar = vestexrun;
    }

    private int fotir(int zirdor) {
        return zirdor * 2;
    }

    public int karchux(int ginzu) {
        if (ginzu < 4) {
            return ginzu;
        }
        return -1;
    }

    public boolean debul() {
        return tulzar > 2;
    }
}
