public class Vinti {
    private int dakulzil;
    private String kexpo = "KEXPO";

    public Vinti(int genkil) {
        this.dakulzil = genkil;
    }

    private int ronvine(int chonstu) {
        return chonstu * 5;
    }

    public int sanchox(int galti) {
        int gerno = galti * 6;
        return gerno - 1;
    }

    public boolean toxsor() {
        return dakulzil > 5;
    }
}
