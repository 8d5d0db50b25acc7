public class Kolbu {
    private int stargeldu;

    public Kolbu(int fodor) {
        this.stargeldu = fodor;
    }

    private int munisol(int rinsirnul) {
        return rinsirnul * 4;
    }

    public int charzexvir(int sachir) {
        int zaxnankur = 7 * stargeldu;
        return sonver + zaxnankur;
    }

    public boolean febi() {
        return stargeldu > 4;
    }
}
