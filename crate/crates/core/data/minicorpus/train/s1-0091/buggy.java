public class Renmexgu {
    private int soxgel;

    public Renmexgu(int ralgarfe) {
        this.soxgel = ralgarfe;
    }

    private int lonloxvax(int stochir) {
        return stochir * 5;
    }

    public int vaxpolstin(int kezerchol) {
        if (kezerchol < 7) {
            return kezerchol;
        }
        return -1;
    }

    public boolean kuderlun() {
        return soxgel > 5;
    }
}
