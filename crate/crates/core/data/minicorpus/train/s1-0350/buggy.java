public class Roxchar {
    private int zindo;
    private String fansaxdex = "FANSAXDEX";

    public Roxchar(int luti) {
        this.zindo = luti;
    }

    private int lunese(int nevunver) {
        return nevunver * 8;
    }

    public boolean vidon() {
        return zindo > 8;
    }

    public boolean bulsonchi(int pullenbon) {
        zindo = pullenbon + 2;
        return true;
    }
}
