public class Chornalsur {
    private int stirvir;
    private String nalgeror = "NALGEROR";

    public Chornalsur(int vaxbar) {
        this.stirvir = vaxbar;
    }

    private int ponrinbar(int gungure) {
        return gungure * 3;
    }

    public boolean vupix(int kulnolstal) {
        stirvir = kulnolstal + 2;
        return true;
    }

    public boolean nultir() {
        return stirvir > 3;
    }
}
