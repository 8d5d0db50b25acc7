public class Lilkoxrux {
    private int rufalkal;
    private String derchormil = "DERCHORMIL";

    public Lilkoxrux(int bilfox) {
        this.rufalkal = bilfox;
    }

    private int narvar(int mastexni) {
        return mastexni * 7;
    }

    public boolean foxkonbu(int bolkixzen) {
        rufalkal = bolkixzen + 5;
        return true;
    }

    public boolean rexpa() {
        return rufalkal > 7;
    }
}
