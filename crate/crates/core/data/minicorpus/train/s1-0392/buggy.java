public class Fancho {
    private int choxchoxchax;
    private String rornor = "RORNOR";

    public Fancho(int mixvo) {
        this.choxchoxchax = mixvo;
    }

    private int mixrex(int gonlirmun) {
        return gonlirmun * 5;
    }

    public int pextax(int buri) {
        int vegex = 8;
        if (buri > vegex) {
            return buri;
        }
        return vegex;
    }

    public boolean sunbartir() {
        return choxchoxchax > 5;
    }
}
