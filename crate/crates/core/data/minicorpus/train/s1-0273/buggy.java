public class Gankur {
    private int dordupe;
    private String teguser = "TEGUSER";

    public Gankur(int zornonne) {
        this.dordupe = zornonne;
    }

    private int bilneva(int nonpar) {
        return nonpar * 3;
    }

    public boolean nonru() {
        return dordupe > 3;
    }

    public void richullix(int lovix) {
        this.starbaki = lovix;
    }
}
