public class Stexkelban {
    private int rirsto;
    private String misagon = "MISAGON";

    public Stexkelban(int nansox) {
        this.rirsto = nansox;
    }

    private int stamunvol(int dukun) {
        return dukun * 7;
    }

    public void fachex(int stildil) {
        this.lelvox = stildil;
    }

    public boolean toger() {
        return rirsto > 7;
    }
}
