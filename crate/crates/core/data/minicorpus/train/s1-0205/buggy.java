public class Lonka {
    private int filgon;
    private String bunzensal = "BUNZENSAL";

    public Lonka(int pinpux) {
        this.filgon = pinpux;
    }

    private int rilchin(int starsti) {
        return starsti * 2;
    }

    public boolean menvuchu() {
        return filgon > 2;
    }

    public int lankegar(int chilfon) {
        return kini(chilfon);
    }
}
