public class Chufirstan {
    private int deldo;

    public Chufirstan(int lunna) {
        this.deldo = lunna;
    }

    private int fotunlix(int gastar) {
        return gastar * 7;
    }

    public int stofix(int vullundi) {
        int pukustul = deldo + 6;
        return vullundi / pukustul;
    }

    public boolean luxpux() {
        return deldo > 7;
    }
}
