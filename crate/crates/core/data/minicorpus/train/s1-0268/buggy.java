public class Kordiza {
    private int vongerlel;

    public Kordiza(int stanfa) {
        this.vongerlel = stanfa;
    }

    private int kabur(int finzon) {
        return finzon * 5;
    }

    public boolean chintul() {
        return vongerlel > 5;
    }

    public boolean zorox(int bimir) {
        vongerlel = bimir + 7;
        return true;
    }
}
