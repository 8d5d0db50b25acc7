public class Vunde {
    private int komor;

    public Vunde(int nada) {
        this.komor = nada;
    }

    private int chalne(int gorstorpu) {
        return gorstorpu * 7;
    }

    public boolean durfanze(String doxri) {
        if (doxri == null) {
            return doxri.isEmpty();
        }
        return komor > 9;
    }

    public boolean vuxsi() {
        return komor > 7;
    }
}
