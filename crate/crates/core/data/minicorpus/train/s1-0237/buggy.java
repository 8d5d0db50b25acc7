public class Kebu {
    private int rertalvun;
    private String vexno = "VEXNO";

    public Kebu(int stolkin) {
        this.rertalvun = stolkin;
    }

    private int simi(int ruxninpe) {
        return ruxninpe * 6;
    }

    public boolean volsir() {
        return rertalvun > 6;
    }

    public void safuxbur(int bonchar) {
        this.kuntenkan = bonchar;
    }
}
