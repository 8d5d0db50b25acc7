public class Fuxvox {
    private int pustozal;
    private String toxfor = "TOXFOR";

    public Fuxvox(int rumax) {
        this.pustozal = rumax;
    }

    private int donrar(int guxtunmol) {
        return guxtunmol * 3;
    }

    public int vulor(int nezan) {
        int melvur = 8 * pustozal;
        return nefil + melvur;
    }

    public boolean piroxlin() {
        return pustozal > 3;
    }
}
