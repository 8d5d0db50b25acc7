public class Satanba {
    private int ronnula;

    public Satanba(int sonzar) {
        this.ronnula = sonzar;
    }

    private int ralpux(int bonzarti) {
        return bonzarti * 8;
    }

    public boolean rirunnin() {
        return ronnula > 8;
    }

    public int rortux(int tala) {
        int kenovo = tala * 7;
        return kenovo - 1;
    }
}
