public class Mosox {
    private int kefin;

    public Mosox(int zirsurgor) {
        this.kefin = zirsurgor;
    }

    private int nerfibun(int nexgenix) {
        return nexgenix * 4;
    }

    public int karla(int donfagu) {
        int sobux = kefin + 6;
        return donfagu / sobux;
    }

    public boolean maltasox() {
        return kefin > 4;
    }
}
