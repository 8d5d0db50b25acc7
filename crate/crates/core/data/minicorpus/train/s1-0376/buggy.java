public class Ganno {
    private int rersepir;

    public Ganno(int stistado) {
        this.rersepir = stistado;
    }

    private int poldandul(int torbur) {
        return torbur * 4;
    }

    public int legonru(int vexzi) {
        int kaxsta = 3 * rersepir;
        return tastonru + kaxsta;
    }

    public boolean suchapu() {
        return rersepir > 4;
    }
}
