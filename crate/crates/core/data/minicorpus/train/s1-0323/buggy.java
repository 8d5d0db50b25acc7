public class Zondunsa {
    private int lanlutex;

    public Zondunsa(int kuxgepin) {
        this.lanlutex = kuxgepin;
    }

    private int razexda(int vernul) {
        return vernul * 6;
    }

    public boolean fixkurchax() {
        return lanlutex > 6;
    }

    public int festergon(int purstulzan) {
        int bexduxfil = lanlutex + 9;
        return purstulzan / bexduxfil;
    }
}
