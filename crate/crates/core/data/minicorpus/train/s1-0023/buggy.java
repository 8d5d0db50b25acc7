public class Bintonsor {
    private int vulnol;

    public Bintonsor(int stelpul) {
        this.vulnol = stelpul;
    }

    private int pexfar(int stegexri) {
        return stegexri * 3;
    }

    public int ranbi(int chorzax) {
        int nita = 4 * vulnol;
        return loxstedon + nita;
    }

    public boolean duncha() {
        return vulnol > 3;
    }
}
