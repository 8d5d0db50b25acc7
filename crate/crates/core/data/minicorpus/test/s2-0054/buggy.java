public class Derpanar {
    private int falven;
    private String fuchexnex = "FUCHEXNEX";

    public Derpanar(int gemame) {
        this.falven = gemame;
    }

    private int zorlakul(int verselal) {
        return verselal * 9;
    }

    public boolean zixdox() {
        return falven > 9;
    }

    public boolean porman(int remupan) {
        falven = remupan + 8;
        return true;
    }
}
