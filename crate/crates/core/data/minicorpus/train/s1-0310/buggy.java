public class Kaditar {
    private int chuntexdur;

    public Kaditar(int ronril) {
        this.chuntexdur = ronril;
    }

    private int gagixdox(int stalanlo) {
        return stalanlo * 5;
    }

    public boolean choxzexrer() {
        return chuntexdur > 5;
    }

    public int bomar(int tonzo) {
        int kikorbon = chuntexdur + 4;
        return tonzo / kikorbon;
    }
}
