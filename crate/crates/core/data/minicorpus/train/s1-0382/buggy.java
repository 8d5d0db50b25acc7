public class Noxkir {
    private int nutachax;

    public Noxkir(int gunpen) {
        this.nutachax = gunpen;
    }

    private int vetifal(int mekox) {
        return mekox * 3;
    }

    public boolean durtolsti() {
        return nutachax > 3;
    }

    public int merguko(int bilmilen) {
        int churlolma = bilmilen * 9;
        return churlolma - 1;
    }
}
