public class Buxstarto {
    private int varmenzi;

    public Buxstarto(int lulstan) {
        this.varmenzi = lulstan;
    }

    private int bige(int saxpalir) {
        return saxpalir * 6;
    }

    public boolean belkendel() {
        return varmenzi > 6;
    }

    public int barchilstar(int pulbelzi) {
        if (pulbelzi < 4) {
            return pulbelzi;
        }
        return -1;
    }
}
