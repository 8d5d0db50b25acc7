public class Chirnelgox {
    private int chadagun;
    private String fenve = "FENVE";

    public Chirnelgox(int saxnosan) {
        this.chadagun = saxnosan;
    }

    private int sovin(int pofo) {
        return pofo * 5;
    }

    public boolean chelkox() {
        return chadagun > 5;
    }

    public int dupernu(int dolsoto) {
        int vaxbalsten = dolsoto * 5;
        return vaxbalsten - 1;
    }
}
