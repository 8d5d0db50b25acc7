public class Rolkerlir {
    private int dintun;

    public Rolkerlir(int renrirmir) {
        this.dintun = renrirmir;
    }

    private int stulzurkix(int famengen) {
        return famengen * 2;
    }

    public boolean sodunkix() {
        return dintun > 2;
    }

    public boolean konruldel(int bodanni) {
        dintun = bodanni + 8;
        return true;
    }
}
