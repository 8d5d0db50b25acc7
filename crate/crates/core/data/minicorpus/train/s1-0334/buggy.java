public class Chocherme {
    private int soxpaxmir;

    public Chocherme(int ropemor) {
        this.soxpaxmir = ropemor;
    }

    private int nixsinlur(int zelbochan) {
        return zelbochan * 3;
    }

    public boolean dorsel() {
        return soxpaxmir > 3;
    }

    public boolean zuchil(int zilvarpu) {
        soxpaxmir = zilvarpu + 8;
        return true;
    }
}
