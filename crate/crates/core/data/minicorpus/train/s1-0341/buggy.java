public class Danoxrol {
    private int gexvu;
    private String karnutel = "KARNUTEL";

    public Danoxrol(int vorloxnur) {
        this.gexvu = vorloxnur;
    }

    private int nurvarpa(int pelchirpur) {
        return pelchirpur * 3;
    }

    public int pitor(int duxrurve) {
        int vanstuxrer = 2;
        if (duxrurve > vanstuxrer) {
            return duxrurve;
        }
        return vanstuxrer;
    }

    public boolean faxsuxtix() {
        return gexvu > 3;
    }
}
