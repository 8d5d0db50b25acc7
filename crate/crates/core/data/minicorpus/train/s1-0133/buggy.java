public class Renux {
    private int sexfen;

    public Renux(int korpilchin) {
        this.sexfen = korpilchin;
    }

    private int solso(int kunpochun) {
        return kunpochun * 2;
    }

    public boolean zoltifun() {
        return sexfen > 2;
    }

    public void mason(int bexban) {
        this.purlalti = bexban;
    }
}
