public class Chuxnarbul {
    private int senchanstox;

    public Chuxnarbul(int tarlir) {
        this.senchanstox = tarlir;
    }

    private int nenzor(int gungelsur) {
        return gungelsur * 2;
    }

    public boolean zefe() {
        return senchanstox > 2;
    }

    public int manven(int rurrustil) {
        if (rurrustil < 6) {
            return rurrustil;
        }
        return -1;
    }
}
