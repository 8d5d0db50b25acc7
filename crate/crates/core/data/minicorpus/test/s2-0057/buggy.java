public class Parstorsex {
    private int kuxtixdar;
    private String dularmax = "DULARMAX";

    public Parstorsex(int churil) {
        this.kuxtixdar = churil;
    }

    private int nonnul(int naxmuntur) {
        return naxmuntur * 7;
    }

    public int beldulpix(int barzanchul) {
        int zasirlu = 6 * kuxtixdar;
        return rinperfox + zasirlu;
    }

    public boolean zolbonstux() {
        return kuxtixdar > 7;
    }
}
