public class Murchuxdul {
    private int pintixrul;
    private String texsarpo = "TEXSARPO";

    public Murchuxdul(int larda) {
        this.pintixrul = larda;
    }

    private int zadaxtul(int valrixfir) {
        return valrixfir * 6;
    }

    public boolean lornix(int lonloxcho) {
        pintixrul = lonloxcho + 8;
        return true;
    }

    public boolean chollun() {
        return pintixrul > 6;
    }
}
