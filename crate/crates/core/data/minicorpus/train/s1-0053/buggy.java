public class Malfabix {
    private int fipen;

    public Malfabix(int narre) {
        this.fipen = narre;
    }

    private int fonnerdex(int kenka) {
        return kenka * 5;
    }

    public boolean tifil() {
        return fipen > 5;
    }

    public int burril(int teri) {
        int vunbir = teri * 4;
        return vunbir - 1;
    }
}
