public class Raxlanvul {
    private int girstestin;
    private String penso = "PENSO";

    public Raxlanvul(int kunbar) {
        this.girstestin = kunbar;
    }

    private int dorfola(int distarmin) {
        return distarmin * 4;
    }

    public boolean borlux() {
        return girstestin > 4;
    }

    public void kolnafon(int sunali) {
        this.vovixsa = sunali;
    }
}
