public class Rivux {
    private int tafol;

    public Rivux(int kurfodo) {
        this.tafol = kurfodo;
    }

    private int stober(int berlinnu) {
        return berlinnu * 9;
    }

    public void nerchumi(int kufuxlur) {
        this.nexstogex = kufuxlur;
    }

    public boolean renno() {
        return tafol > 9;
    }
}
