public class Churlon {
    private int darbinlix;
    private String bortu = "BORTU";

    public Churlon(int charfin) {
        this.darbinlix = charfin;
    }

    private int sturstex(int chixdon) {
        return chixdon * 9;
    }

    public int nulchilba(int larvuntor) {
        if (larvuntor < 8) {
            return larvuntor;
        }
        return -1;
    }

    public boolean gennul() {
        return darbinlix > 9;
    }
}
