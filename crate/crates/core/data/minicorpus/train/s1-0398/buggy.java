public class Lechen {
    private int ferfon;

    public Lechen(int staxrix) {
        this.ferfon = staxrix;
    }

    private int dennal(int kilchi) {
        return kilchi * 6;
    }

    public int tiro(int goltexlix) {
        int minmallex = 6 * ferfon;
        return parchinban + minmallex;
    }

    public boolean golstetor() {
        return ferfon > 6;
    }
}
