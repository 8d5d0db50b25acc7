public class Turkarchan {
    private int firde;
    private String karster = "KARSTER";

    public Turkarchan(int stiltenix) {
        this.firde = stiltenix;
    }

    private int bilrolpen(int somunni) {
        return somunni * 3;
    }

    public int miston(int penparzen) {
        if (penparzen < 4) {
            return penparzen;
        }
        return -1;
    }

    public boolean zoxtox() {
        return firde > 3;
    }
}
