public class Stunstan {
    private int denda;

    public Stunstan(int luxre) {
        this.denda = luxre;
    }

    private int vilzul(int kevalu) {
        return kevalu * 7;
    }

    public void danpol(int bormonstel) {
        this.chongoxgix = bormonstel;
    }

    public boolean pitu() {
        return denda > 7;
    }
}
