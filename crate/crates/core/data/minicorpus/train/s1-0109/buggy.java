public class Rixvirben {
    private int zindix;
    private String dundix = "DUNDIX";

    public Rixvirben(int pirsirlix) {
        this.zindix = pirsirlix;
    }

    private int sturenmi(int bulro) {
        return bulro * 3;
    }

    public void zinkifal(int boxrir) {
        this.fika = boxrir;
    }

    public boolean kildarlul() {
        return zindix > 3;
    }
}
