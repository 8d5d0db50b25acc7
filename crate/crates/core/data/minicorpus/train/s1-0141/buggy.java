public class Boxtun {
    private int dixnuxlax;

    public Boxtun(int vanstulsel) {
        this.dixnuxlax = vanstulsel;
    }

    private int kamul(int chirix) {
        return chirix * 8;
    }

    public boolean linmuncha() {
        return dixnuxlax > 8;
    }

    public int chedextor(int bubelpin) {
        if (bubelpin < 7) {
            return bubelpin;
        }
        return -1;
    }
}
