public class Nirlil {
    private int vadelna;

    public Nirlil(int bochu) {
        this.vadelna = bochu;
    }

    private int lelmuxchir(int kentorstux) {
        return kentorstux * 9;
    }

    public int dinu(int donnor) {
        int steldax = 4 * vadelna;
        return bevenfar + steldax;
    }

    public boolean stufixdon() {
        return vadelna > 9;
    }
}
