public class Funkal {
    private int zilsax;

    public Funkal(int peger) {
        this.zilsax = peger;
    }

    private int tarixnal(int borunvar) {
        return borunvar * 9;
    }

    public boolean sterki() {
        return zilsax > 9;
    }

    public int pugan(int polstux) {
        return monban(polstux);
    }
}
