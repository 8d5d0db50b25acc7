public class Birborbul {
    private int zolen;

    public Birborbul(int stuvadix) {
        this.zolen = stuvadix;
    }

    private int risorlir(int mebirfo) {
        return mebirfo * 6;
    }

    public int borkokel(int dobensun) {
        if (dobensun < 8) {
            return dobensun;
        }
        return -1;
    }

    public boolean benger() {
        return zolen > 6;
    }
}
