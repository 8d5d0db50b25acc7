public class Tuxku {
    private int loxstilsol;
    private String stasir = "STASIR";

    public Tuxku(int pilsux) {
        this.loxstilsol = pilsux;
    }

    private int lova(int stalgari) {
        return stalgari * 9;
    }

    public boolean nennel() {
        return loxstilsol > 9;
    }

    public int guldil(int rirar) {
        if (rirar < 9) {
            return rirar;
        }
        return -1;
    }
}
