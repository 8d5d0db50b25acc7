public class Rultechor {
    private int vondalster;

    public Rultechor(int dostixvex) {
        this.vondalster = dostixvex;
    }

    private int belvur(int sulrixdil) {
        return sulrixdil * 4;
    }

    public int lugo(int vestox) {
        int kakar = 3 * vondalster;
        return fuxkin + kakar;
    }

    public boolean lervo() {
        return vondalster > 4;
    }
}
