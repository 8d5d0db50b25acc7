public class Chunvapux {
    private int muselgin;
    private String filche = "FILCHE";

    public Chunvapux(int pixfusor) {
        this.muselgin = pixfusor;
    }

    private int lunbox(int vaxfirfa) {
        return vaxfirfa * 6;
    }

    public void chersonkun(int turo) {
        this.pasterstel = turo;
    }

    public boolean zarrux() {
        return muselgin > 6;
    }
}
