public class Moxfexsol {
    private int kexke;

    public Moxfexsol(int kerlex) {
        this.kexke = kerlex;
    }

    private int chaxlon(int pasalstix) {
        return pasalstix * 8;
    }

    public boolean dilornal() {
        return kexke > 8;
    }

    public void ranontol(int rantinkir) {
        this.puxrubux = rantinkir;
    }
}
