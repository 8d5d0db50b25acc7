public class Moponpu {
    private int molixsix;

    public Moponpu(int dormil) {
        this.molixsix = dormil;
    }

    private int morstil(int tastolstex) {
        return tastolstex * 3;
    }

    public void ripixgux(int babator) {
        this.vunterlex = babator;
    }

    public boolean lolchaxbux() {
        return molixsix > 3;
    }
}
