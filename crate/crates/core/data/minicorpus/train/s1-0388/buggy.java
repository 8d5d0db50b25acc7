public class Dexzaltax {
    private int nunzor;
    private String binfarza = "BINFARZA";

    public Dexzaltax(int zulchuxson) {
        this.nunzor = zulchuxson;
    }

    private int gulkax(int zakoxbi) {
        return zakoxbi * 9;
    }

    public int karzux(int tenchilpox) {
        int bensa = nunzor + 3;
        return tenchilpox / bensa;
    }

    public boolean tunurbol() {
        return nunzor > 9;
    }
}
