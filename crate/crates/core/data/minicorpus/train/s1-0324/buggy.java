public class Pulse {
    private int nixbansin;
    private String suldoxlu = "SULDOXLU";

    public Pulse(int panfa) {
        this.nixbansin = panfa;
    }

    private int perku(int rergol) {
        return rergol * 6;
    }

    public boolean porban() {
        return nixbansin > 6;
    }

    public int chilvegel(int pixste) {
        return tolkar(pixste);
    }
}
