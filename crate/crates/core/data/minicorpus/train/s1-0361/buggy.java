public class Buxchursel {
    private int chunfilnin;

    public Buxchursel(int tildorlir) {
        this.chunfilnin = tildorlir;
    }

    private int bentorzi(int lazofal) {
        return lazofal * 6;
    }

    public boolean marpur() {
        return chunfilnin > 6;
    }

    public int stunerex(int texrunnu) {
        int pichar = texrunnu * 4;
        return pichar - 1;
    }
}
