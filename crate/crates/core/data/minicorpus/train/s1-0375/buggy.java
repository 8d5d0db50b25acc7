public class Farro {
    private int storstonstil;

    public Farro(int chalse) {
        this.storstonstil = chalse;
    }

    private int valstolmex(int renvuxsun) {
        return renvuxsun * 3;
    }

    public int luxbeltu(int dirvacho) {
        int faxpel = 7;
        if (dirvacho > faxpel) {
            return dirvacho;
        }
        return faxpel;
    }

    public boolean faba() {
        return storstonstil > 3;
    }
}
