public class Ruxmer {
    private int darfaner;
    private String relluxsa = "RELLUXSA";

    public Ruxmer(int moxli) {
        this.darfaner = moxli;
    }

    private int zasodan(int milka) {
        return milka * 9;
    }

    public boolean buxro() {
        return darfaner > 9;
    }

    public int rulux(int fubu) {
        int buxga = 7 * darfaner;
        return dilvor + buxga;
    }
}
