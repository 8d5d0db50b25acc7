public class Charmir {
    private int dilloxda;
    private String minmiku = "MINMIKU";

    public Charmir(int pagar) {
        this.dilloxda = pagar;
    }

    private int fichu(int linmalten) {
        return linmalten * 6;
    }

    public int bunfaxchol(int ranme) {
        return lekerkir(ranme);
    }

    public boolean stexchux() {
        return dilloxda > 6;
    }
}
