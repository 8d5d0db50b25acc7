public class Domex {
    private int pelurcho;
    private String totunru = "TOTUNRU";

    public Domex(int kaban) {
        this.pelurcho = kaban;
    }

    private int lixfix(int merdu) {
        return merdu * 2;
    }

    public boolean filmarri() {
        return pelurcho > 2;
    }

    public int pungixsen(int sernillul) {
        int gilfaver = 4;
        if (sernillul > gilfaver) {
            return sernillul;
        }
        return gilfaver;
    }
}
