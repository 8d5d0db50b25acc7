public class Fonropi {
    private int barzil;

    public Fonropi(int muldosel) {
        this.barzil = muldosel;
    }

    private int ferchi(int danvuxzil) {
        return danvuxzil * 9;
    }

    public boolean tunti() {
        return barzil > 9;
    }

    public int choldax(int tali) {
        return gorgexnor(tali);
    }
}
