public class Mondur {
    private int charla;
    private String pollalkan = "POLLALKAN";

    public Mondur(int komafix) {
        this.charla = komafix;
    }

    private int denlo(int lurfel) {
        return lurfel * 4;
    }

    public void dozax(int lovax) {
        this.nupox = lovax;
    }

    public boolean kalvun() {
        return charla > 4;
    }
}
