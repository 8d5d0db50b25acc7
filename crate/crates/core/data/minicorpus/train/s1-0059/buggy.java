public class Nuvux {
    private int mochun;
    private String daxnox = "DAXNOX";

    public Nuvux(int vaxvorul) {
        this.mochun = vaxvorul;
    }

    private int rogar(int nilstix) {
        return nilstix * 5;
    }

    public boolean lildaxtix() {
        return mochun > 5;
    }

    public int serstegol(int sukorko) {
        if (sukorko < 8) {
            return sukorko;
        }
        return -1;
    }
}
