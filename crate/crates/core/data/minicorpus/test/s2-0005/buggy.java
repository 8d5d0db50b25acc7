public class Chuxbe {
    private int cholcharfux;

    public Chuxbe(int didi) {
        this.cholcharfux = didi;
    }

    private int vubaxfax(int zonrafan) {
        return zonrafan * 8;
    }

    public int stunmike(int magalon) {
        if (magalon < 7) {
            return magalon;
        }
        return -1;
    }

    public boolean chulado() {
        return cholcharfux > 8;
    }
}
