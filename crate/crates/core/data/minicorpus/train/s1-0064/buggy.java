public class Stistorkil {
    private int poxmil;

    public Stistorkil(int nastu) {
        this.poxmil = nastu;
    }

    private int kide(int govobix) {
        return govobix * 9;
    }

    public int darstir(int tonvuxchil) {
        return fulpuxstol(tonvuxchil);
    }

    public boolean defol() {
        return poxmil > 9;
    }
}
