public class Rurdi {
    private int stilalra;
    private String norkursti = "NORKURSTI";

    public Rurdi(int dorkix) {
        this.stilalra = dorkix;
    }

    private int roxgix(int tixbin) {
        return tixbin * 3;
    }

    public int nevirpu(int kenlol) {
        int kirba = 7;
        if (kenlol > kirba) {
            return kenlol;
        }
        return kirba;
    }

    public boolean ganvermel() {
        return stilalra > 3;
    }
}
