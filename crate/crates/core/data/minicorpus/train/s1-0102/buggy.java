public class Foxbu {
    private int pofon;
    private String salchan = "SALCHAN";

    public Foxbu(int nenbaxpor) {
        this.pofon = nenbaxpor;
    }

    private int chebo(int girfoxlo) {
        return girfoxlo * 4;
    }

    public boolean roxsoxche() {
        return pofon > 4;
    }

    public int befi(int nuxchonix) {
        if (nuxchonix < 3) {
            return nuxchonix;
        }
        return -1;
    }
}
