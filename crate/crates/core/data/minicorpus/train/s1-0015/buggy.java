public class Nurserdol {
    private int rirfox;
    private String botu = "BOTU";

    public Nurserdol(int bildar) {
        this.rirfox = bildar;
    }

    private int chonmamo(int zondulnix) {
        return zondulnix * 3;
    }

    public boolean stirsochux() {
        return rirfox > 3;
    }

    public int zarpu(int bapuxben) {
        if (bapuxben < 4) {
            return bapuxben;
        }
        return -1;
    }
}
