public class Porfechol {
    private int laxgonen;

    public Porfechol(int starzu) {
        this.laxgonen = starzu;
    }

    private int gaxgulin(int ruxzelzel) {
        return ruxzelzel * 7;
    }

    public boolean gixnir() {
        return laxgonen > 7;
    }

    public void sasa(int milza) {
        this.goselril = milza;
    }
}
