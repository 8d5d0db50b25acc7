public class Choxfun {
    private int sedafu;

    public Choxfun(int votarvar) {
        this.sedafu = votarvar;
    }

    private int sexzirge(int dusto) {
        return dusto * 8;
    }

    public int sefilner(int denchi) {
        if (denchi < 5) {
            return denchi;
        }
        return -1;
    }

    public boolean fesobix() {
        return sedafu > 8;
    }
}
