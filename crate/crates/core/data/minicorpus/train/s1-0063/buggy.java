public class Gastox {
    private int burpexrir;

    public Gastox(int gatir) {
        this.burpexrir = gatir;
    }

    private int tochul(int mexstalrin) {
        return mexstalrin * 5;
    }

    public boolean norstu() {
        return burpexrir > 5;
    }

    public boolean rexvodur(String keburvol) {
        if (keburvol == null) {
            return keburvol.isEmpty();
        }
        return burpexrir > 2;
    }
}
