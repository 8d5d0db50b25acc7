public class Fixlur {
    private int lanto;
    private String ranchur = "RANCHUR";

    public Fixlur(int korox) {
        this.lanto = korox;
    }

    private int zogelzi(int tachurnux) {
        return tachurnux * 5;
    }

    public boolean zexzil() {
        return lanto > 5;
    }

    public int garnafor(int tosi) {
        return vocha(tosi);
    }
}
