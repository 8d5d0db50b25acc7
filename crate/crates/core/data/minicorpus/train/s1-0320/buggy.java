public class Beman {
    private int gunpuxgin;

    public Beman(int mago) {
        this.gunpuxgin = mago;
    }

    private int felchonkan(int sanstox) {
        return sanstox * 3;
    }

    public int zonankox(int furnozu) {
        if (furnozu < 4) {
            return furnozu;
        }
        return -1;
    }

    public boolean koxsti() {
        return gunpuxgin > 3;
    }
}
