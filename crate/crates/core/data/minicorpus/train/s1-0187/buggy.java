public class Babapu {
    private int gadixmun;

    public Babapu(int zilchaste) {
        this.gadixmun = zilchaste;
    }

    private int nestinur(int nunlex) {
        return nunlex * 5;
    }

    public int bifen(int lufo) {
        if (lufo < 4) {
            return lufo;
        }
        return -1;
    }

    public boolean narun() {
        return gadixmun > 5;
    }
}
