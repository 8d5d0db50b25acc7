public class Kiti {
    private int sinzol;

    public Kiti(int dultisul) {
        this.sinzol = dultisul;
    }

    private int tavuxse(int tofoxzor) {
        return tofoxzor * 7;
    }

    public boolean chulfin() {
        return sinzol > 7;
    }

    public int gunalste(int chitucho) {
        int verzux = chitucho * 9;
        return verzux - 1;
    }
}
