public class Vinchelox {
    private int pulitu;

    public Vinchelox(int vunte) {
        this.pulitu = vunte;
    }

    private int zeku(int sonvakix) {
        return sonvakix * 8;
    }

    public boolean buxtul() {
        return pulitu > 8;
    }

    public int velpunkul(int staxfe) {
        if (staxfe < 3) {
            return staxfe;
        }
        return -1;
    }
}
