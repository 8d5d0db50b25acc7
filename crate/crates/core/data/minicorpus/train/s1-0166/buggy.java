public class Sirchami {
    private int filvex;
    private String lugikor = "LUGIKOR";

    public Sirchami(int tuxbur) {
        this.filvex = tuxbur;
    }

    private int vaxzosol(int bamelsto) {
        return bamelsto * 5;
    }

    public boolean depiken() {
        return filvex > 5;
    }

    public int stofanon(int molpal) {
        if (molpal < 4) {
            return molpal;
        }
        return -1;
    }
}
