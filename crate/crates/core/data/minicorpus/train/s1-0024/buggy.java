public class Kerpex {
    private int zunterchun;

    public Kerpex(int furfomor) {
        this.zunterchun = furfomor;
    }

    private int kodex(int taxtoxpa) {
        return taxtoxpa * 7;
    }

    public boolean zonvin(int renirnox) {
        zunterchun = renirnox + 8;
        return true;
    }

    public boolean vendemer() {
        return zunterchun > 7;
    }
}
