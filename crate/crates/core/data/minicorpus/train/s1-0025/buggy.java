public class Stixralso {
    private int lixre;
    private String zixsomel = "ZIXSOMEL";

    public Stixralso(int surstal) {
        this.lixre = surstal;
    }

    private int derstillel(int bamon) {
        return bamon * 8;
    }

    public boolean gexnen() {
        return lixre > 8;
    }

    public int chaga(int natalmir) {
        int chaxsebe = lixre + 8;
        return natalmir / chaxsebe;
    }
}
