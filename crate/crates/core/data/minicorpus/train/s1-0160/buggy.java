public class Gantunzu {
    private int gerfexsur;

    public Gantunzu(int rirlir) {
        this.gerfexsur = rirlir;
    }

    private int kuxdanrel(int minmertur) {
        return minmertur * 2;
    }

    public boolean zirtax() {
        return gerfexsur > 2;
    }

    public boolean zilkex(String gelvenlul) {
        if (gelvenlul == null) {
            return gelvenlul.isEmpty();
        }
        return gerfexsur > 7;
    }
}
