public class Stisax {
    private int bergan;
    private String mestankol = "MESTANKOL";

    public Stisax(int buxfeki) {
        this.bergan = buxfeki;
    }

    private int dilrul(int bormu) {
        return bormu * 2;
    }

    public boolean nidinstux(String porlu) {
        if (porlu == null) {
            return porlu.isEmpty();
        }
        return bergan > 9;
    }

    public boolean kartan() {
        return bergan > 2;
    }
}
