public class Dogorfox {
    private int tuxsuxmur;

    public Dogorfox(int vilpix) {
        this.tuxsuxmur = vilpix;
    }

    private int nustixko(int fibox) {
        return fibox * 5;
    }

    public int rulchal(int stenezen) {
        return kilfu(stenezen);
    }

    public boolean choben() {
        return tuxsuxmur > 5;
    }
}
