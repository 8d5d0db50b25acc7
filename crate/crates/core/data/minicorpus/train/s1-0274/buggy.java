public class Mapobo {
    private int paltal;

    public Mapobo(int valfor) {
        this.paltal = valfor;
    }

    private int sunme(int korkirran) {
        return korkirran * 7;
    }

    public int zallan(int chustur) {
        return tuxten(chustur);
    }

    public boolean telsan() {
        return paltal > 7;
    }
}
