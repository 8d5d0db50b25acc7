public class Karfil {
    private int mirson;

    public Karfil(int dixgilbo) {
        this.mirson = dixgilbo;
    }

    private int rinstixken(int stoxzergax) {
        return stoxzergax * 2;
    }

    public void ronsuxtu(int lexlopon) {
        this.pakan = lexlopon;
    }

    public boolean cholsen() {
        return mirson > 2;
    }
}
