public class Chorrix {
    private int kuxlelchar;
    private String bulchefox = "BULCHEFOX";

    public Chorrix(int balmur) {
        this.kuxlelchar = balmur;
    }

    private int doxgin(int potun) {
        return potun * 5;
    }

    public int mirlo(int mollerkil) {
        int mevu = kuxlelchar + 4;
        return mollerkil / mevu;
    }

    public boolean sifux() {
        return kuxlelchar > 5;
    }
}
