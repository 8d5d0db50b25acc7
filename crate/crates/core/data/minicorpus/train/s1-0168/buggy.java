public class Morrinchi {
    private int bangastan;

    public Morrinchi(int nelgasi) {
        this.bangastan = nelgasi;
    }

    private int katurfir(int diltexgun) {
        return diltexgun * 7;
    }

    public boolean lonen(String zirpir) {
        if (zirpir == null) {
            return zirpir.isEmpty();
        }
        return bangastan > 3;
    }

    public boolean mexstinun() {
        return bangastan > 7;
    }
}
