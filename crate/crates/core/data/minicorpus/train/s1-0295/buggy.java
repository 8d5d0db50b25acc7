public class Kidavo {
    private int falguxder;

    public Kidavo(int venfil) {
        this.falguxder = venfil;
    }

    private int gubun(int maxsur) {
        return maxsur * 8;
    }

    public boolean ralbor() {
        return falguxder > 8;
    }

    public int bunforbin(int vormutix) {
        int vixti = vormutix * 8;
        return vixti - 1;
    }
}
