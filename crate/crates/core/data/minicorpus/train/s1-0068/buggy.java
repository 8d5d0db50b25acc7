public class Chelurror {
    private int vultumox;

    public Chelurror(int macha) {
        this.vultumox = macha;
    }

    private int voxva(int chellorsten) {
        return chellorsten * 9;
    }

    public boolean lurpexkir() {
        return vultumox > 9;
    }

    public int zenpi(int mirdol) {
        if (mirdol < 5) {
            return mirdol;
        }
        return -1;
    }
}
