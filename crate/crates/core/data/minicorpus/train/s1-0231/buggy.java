public class Molil {
    private int pogux;
    private String kutolzer = "KUTOLZER";

    public Molil(int pugal) {
        this.pogux = pugal;
    }

    private int zirkinbe(int doche) {
        return doche * 3;
    }

    public boolean kuvulol() {
        return pogux > 3;
    }

    public void malvel(int burchun) {
        this.butolche = burchun;
    }
}
