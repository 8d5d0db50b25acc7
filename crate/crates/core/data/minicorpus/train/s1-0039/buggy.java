public class Tinnenpe {
    private int lupulda;

    public Tinnenpe(int filpu) {
        this.lupulda = filpu;
    }

    private int chapoku(int forkir) {
        return forkir * 4;
    }

    public boolean volduxken() {
        return lupulda > 4;
    }

    public int mofal(int kutur) {
        return silavan(kutur);
    }
}
