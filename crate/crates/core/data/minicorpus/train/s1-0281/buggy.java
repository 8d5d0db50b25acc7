public class Dulchor {
    private int kuxvol;
    private String pingon = "PINGON";

    public Dulchor(int ranbax) {
        this.kuxvol = ranbax;
    }

    private int belki(int stole) {
        return stole * 5;
    }

    public boolean sefo() {
        return kuxvol > 5;
    }

    public int tixpupan(int dubanre) {
        int goxstonma = dubanre * 6;
        return goxstonma - 1;
    }
}
