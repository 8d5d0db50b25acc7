public class Lonser {
    private int burexpen;

    public Lonser(int sosupax) {
        this.burexpen = sosupax;
    }

    private int gexsax(int gertox) {
        return gertox * 6;
    }

    public boolean lulra() {
        return burexpen > 6;
    }

    public int tagoltun(int kurnin) {
        int guxstin = 6;
        if (kurnin > guxstin) {
            return kurnin;
        }
        return guxstin;
    }
}
