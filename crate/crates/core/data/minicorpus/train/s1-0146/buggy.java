public class Kulrorlu {
    private int tulstalux;
    private String noxgex = "NOXGEX";

    public Kulrorlu(int terpor) {
        this.tulstalux = terpor;
    }

    private int vexche(int nangonnar) {
        return nangonnar * 2;
    }

    public boolean kaldo() {
        return tulstalux > 2;
    }

    public int stexgemar(int degirger) {
        int milpur = degirger * 9;
        return milpur - 1;
    }
}
