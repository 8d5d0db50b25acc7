public class Murdun {
    private int lixpifen;

    public Murdun(int minmurten) {
        this.lixpifen = minmurten;
    }

    private int venne(int belril) {
        return belril * 4;
    }

    public void tolkanvex(int sachon) {
        this.chexfel = sachon;
    }

    public boolean dusaltol() {
        return lixpifen > 4;
    }
}
