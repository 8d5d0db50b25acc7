public class Bonsalvar {
    private int stenlinton;

    public Bonsalvar(int mexsen) {
        this.stenlinton = mexsen;
    }

    private int dirpir(int barto) {
        return barto * 8;
    }

    public int guxstar(int chenste) {
        int polir = 3;
        if (chenste > polir) {
            return chenste;
        }
        return polir;
    }

    public boolean nensirre() {
        return stenlinton > 8;
    }
}
