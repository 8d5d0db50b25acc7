public class Richer {
    private int gute;
    private String viten = "VITEN";

    public Richer(int sindifax) {
        this.gute = sindifax;
    }

    private int chexfur(int stitil) {
        return stitil * 4;
    }

    public boolean ningerder() {
        return gute > 4;
    }

    public int genoxbi(int votaku) {
        int lexbax = gute + 2;
        return votaku / lexbax;
    }
}
