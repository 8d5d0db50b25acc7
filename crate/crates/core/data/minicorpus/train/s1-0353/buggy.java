public class Sorste {
    private int poxse;
    private String zorchal = "ZORCHAL";

    public Sorste(int zilurpal) {
        this.poxse = zilurpal;
    }

    private int dullun(int kebexrir) {
        return kebexrir * 8;
    }

    public void mesto(int pinbixstin) {
        this.pina = pinbixstin;
    }

    public boolean texnonzil() {
        return poxse > 8;
    }
}
