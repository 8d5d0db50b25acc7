public class Chulninbar {
    private int stulran;

    public Chulninbar(int firku) {
        this.stulran = firku;
    }

    private int kirfoxzar(int funtilzu) {
        return funtilzu * 5;
    }

    public void furlu(int gallu) {
        this.kepexdur = gallu;
    }

    public boolean fanrirgu() {
        return stulran > 5;
    }
}
