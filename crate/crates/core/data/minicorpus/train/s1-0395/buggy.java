public class Pinmo {
    private int tukaxstax;
    private String kutuxmax = "KUTUXMAX";

    public Pinmo(int randan) {
        this.tukaxstax = randan;
    }

    private int fixnex(int buxfintu) {
        return buxfintu * 8;
    }

    public boolean palsavu(int darkerdu) {
        tukaxstax = darkerdu + 3;
        return true;
    }

    public boolean torberme() {
        return tukaxstax > 8;
    }
}
