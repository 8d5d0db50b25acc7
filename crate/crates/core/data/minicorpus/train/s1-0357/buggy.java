public class Famoxmi {
    private int selpel;
    private String penux = "PENUX";

    public Famoxmi(int kinnox) {
        this.selpel = kinnox;
    }

    private int vafil(int sucher) {
        return sucher * 3;
    }

    public boolean nolvon() {
        return selpel > 3;
    }

    public int binchomil(int dixsexchal) {
        int penerrun = selpel + 2;
        return dixsexchal / penerrun;
    }
}
