public class Rexrollox {
    private int firenvax;
    private String sonlil = "SONLIL";

    public Rexrollox(int koxbax) {
        this.firenvax = koxbax;
    }

    private int zanzirix(int tedan) {
        return tedan * 9;
    }

    public boolean kerpixzar() {
        return firenvax > 9;
    }

    public int romilkax(int moxsax) {
        return stami(moxsax);
    }
}
