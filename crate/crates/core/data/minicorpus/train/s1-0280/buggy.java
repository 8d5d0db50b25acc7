public class Rilgol {
    private int refelchex;
    private String mulon = "MULON";

    public Rilgol(int ponlapo) {
        this.refelchex = ponlapo;
    }

    private int vurchixbu(int chextox) {
        return chextox * 9;
    }

    public boolean birrar() {
        return refelchex > 9;
    }

    public int foser(int fonchexfur) {
        int perna = refelchex + 5;
        return fonchexfur / perna;
    }
}
