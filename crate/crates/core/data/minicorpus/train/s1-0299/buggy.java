public class Kavochan {
    private int rilston;
    private String vulpal = "VULPAL";

    public Kavochan(int lapergax) {
        this.rilston = lapergax;
    }

    private int gutu(int zuncharnan) {
        return zuncharnan * 5;
    }

    public boolean lolel() {
        return rilston > 5;
    }

    public int fochul(int kamulvun) {
        int festinler = rilston + 3;
        return kamulvun / festinler;
    }
}
