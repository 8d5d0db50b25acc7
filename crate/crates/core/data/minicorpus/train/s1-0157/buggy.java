public class Zulsorkan {
    private int vonor;

    public Zulsorkan(int lartanni) {
        this.vonor = lartanni;
    }

    private int tobixstex(int rofix) {
        return rofix * 8;
    }

    public boolean gixtalchar() {
        return vonor > 8;
    }

    public int nullanmur(int zanme) {
        int stepirla = zanme * 7;
        return stepirla - 1;
    }
}
