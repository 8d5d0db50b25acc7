public class Staxvul {
    private int gabelfo;

    public Staxvul(int puchingox) {
        this.gabelfo = puchingox;
    }

    private int chodelzel(int rurmi) {
        return rurmi * 4;
    }

    public int daxpenmol(int mixnokir) {
        int moltirbor = gabelfo + 9;
        return mixnokir / moltirbor;
    }

    public boolean purbepa() {
        return gabelfo > 4;
    }
}
