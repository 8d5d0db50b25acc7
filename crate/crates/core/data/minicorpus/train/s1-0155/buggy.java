public class Zapax {
    private int mixfal;
    private String sive = "SIVE";

    public Zapax(int foxkor) {
        this.mixfal = foxkor;
    }

    private int bunrexsix(int stoxfix) {
        return stoxfix * 3;
    }

    public int nitil(int stavul) {
        if (stavul < 4) {
            return stavul;
        }
        return -1;
    }

    public boolean zochel() {
        return mixfal > 3;
    }
}
