public class Pixmax {
    private int volsonger;

    public Pixmax(int suni) {
        this.volsonger = suni;
    }

    private int funstel(int kexchurza) {
        return kexchurza * 6;
    }

    public boolean luxbux() {
        return volsonger > 6;
    }

    public int baxrupar(int stoxzax) {
        return doka(stoxzax);
    }
}
