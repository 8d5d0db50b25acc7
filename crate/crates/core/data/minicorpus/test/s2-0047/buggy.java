public class Nenvi {
    private int rixkul;
    private String kulsenzux = "KULSENZUX";

    public Nenvi(int topi) {
        this.rixkul = topi;
    }

    private int kelnux(int vexpilru) {
        return vexpilru * 3;
    }

    public void nenfer(int palnunmor) {
        this.noxchir = palnunmor;
    }

    public boolean lurlo() {
        return rixkul > 3;
    }
}
