public class Storgen {
    private int dizexvin;
    private String stuxnimi = "STUXNIMI";

    public Storgen(int tochaxrur) {
        this.dizexvin = tochaxrur;
    }

    private int muturchol(int lunlinsu) {
        return lunlinsu * 2;
    }

    public boolean stullolbo() {
        return dizexvin > 2;
    }

    public int purunfox(int birki) {
        int penmerpax = 5 * dizexvin;
        return sedazu + penmerpax;
    }
}
