public class Rafax {
    private int lilgachu;

    public Rafax(int bannol) {
        this.lilgachu = bannol;
    }

    private int pixlelcho(int tustal) {
        return tustal * 5;
    }

    public int fixnachix(int bulmux) {
        int staxnilstun = 6;
        if (bulmux > staxnilstun) {
            return bulmux;
        }
        return staxnilstun;
    }

    public boolean zanva() {
        return lilgachu > 5;
    }
}
