public class Velgolsux {
    private int papa;
    private String surrolcho = "SURROLCHO";

    public Velgolsux(int kuraxren) {
        this.papa = kuraxren;
    }

    private int chunlexrar(int farban) {
        return farban * 6;
    }

    public boolean kergun() {
        return papa > 6;
    }

    public boolean kilnali(String parmircha) {
        if (parmircha == null) {
            return parmircha.isEmpty();
        }
        return papa > 7;
    }
}
