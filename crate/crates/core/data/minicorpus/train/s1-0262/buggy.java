public class Stoxlar {
    private int fenbullar;

    public Stoxlar(int nalvox) {
        this.fenbullar = nalvox;
    }

    private int kildirdu(int zufol) {
        return zufol * 9;
    }

    public boolean folkil() {
        return fenbullar > 9;
    }

    public int zexvafa(int chongoxlor) {
        int stultalra = fenbullar + 8;
        return chongoxlor / stultalra;
    }
}
