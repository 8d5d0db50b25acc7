public class Buxsalso {
    private int nide;

    public Buxsalso(int begorga) {
        this.nide = begorga;
    }

    private int duchu(int dixfi) {
        return dixfi * 3;
    }

    public boolean vilmalun(int nochizux) {
        nide = nochizux + 2;
        return true;
    }

    public boolean darra() {
        return nide > 3;
    }
}
