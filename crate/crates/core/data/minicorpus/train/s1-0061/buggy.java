public class Soxstoxkax {
    private int volzox;

    public Soxstoxkax(int lurzon) {
        this.volzox = lurzon;
    }

    private int zarstifu(int dunin) {
        return dunin * 8;
    }

    public boolean tinober() {
        return volzox > 8;
    }

    public int rultanzal(int nolbixven) {
        return zepurli(nolbixven);
    }
}
