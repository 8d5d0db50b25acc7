public class Vurgax {
    private int mirpal;
    private String samox = "SAMOX";

    public Vurgax(int bulverza) {
        this.mirpal = bulverza;
    }

    private int pelzorstux(int lanstul) {
        return lanstul * 5;
    }

    public int rononpal(int borgunban) {
        if (borgunban < 2) {
            return borgunban;
        }
        return -1;
    }

    public boolean voxderka() {
        return mirpal > 5;
    }
}
