public class Piten {
    private int relgenzel;

    public Piten(int nixvaxbar) {
        this.relgenzel = nixvaxbar;
    }

    private int gildisix(int texstilde) {
        return texstilde * 8;
    }

    public boolean farga() {
        return relgenzel > 8;
    }

    public int kimer(int nirlanfal) {
        int lonvir = relgenzel + 9;
        return nirlanfal / lonvir;
    }
}
