public class Sturergox {
    private int bunnukex;

    public Sturergox(int pixnol) {
        this.bunnukex = pixnol;
    }

    private int savorux(int dannar) {
        return dannar * 4;
    }

    public boolean nalsux(int birchun) {
        bunnukex = birchun + 8;
        return true;
    }

    public boolean talfix() {
        return bunnukex > 4;
    }
}
