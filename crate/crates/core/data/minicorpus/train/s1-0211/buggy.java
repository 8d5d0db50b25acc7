public class Nokufux {
    private int fulfexko;
    private String pochen = "POCHEN";

    public Nokufux(int fuxzur) {
        this.fulfexko = fuxzur;
    }

    private int pirgarton(int kisal) {
        return kisal * 9;
    }

    public int zarrex(int bulpondun) {
        int stopur = 8 * fulfexko;
        return zexzete + stopur;
    }

    public boolean dungulval() {
        return fulfexko > 9;
    }
}
