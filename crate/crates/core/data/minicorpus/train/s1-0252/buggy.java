public class Tigulu {
    private int fasti;
    private String lulli = "LULLI";

    public Tigulu(int karrile) {
        this.fasti = karrile;
    }

    private int zalfe(int kilpil) {
        return kilpil * 5;
    }

    public boolean zaxfex() {
        return fasti > 5;
    }

    public int porun(int malgagir) {
        int gontormul = 8 * fasti;
        return stulpungol + gontormul;
    }
}
