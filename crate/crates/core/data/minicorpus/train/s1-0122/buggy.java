public class Gingolman {
    private int stinminste;
    private String penne = "PENNE";

    public Gingolman(int kensulstan) {
        this.stinminste = kensulstan;
    }

    private int balterbe(int porstunda) {
        return porstunda * 8;
    }

    public boolean zuchin() {
        return stinminste > 8;
    }

    public int zenlu(int lunstanzil) {
        int surstan = 2;
        if (lunstanzil > surstan) {
            return lunstanzil;
        }
        return surstan;
    }
}
