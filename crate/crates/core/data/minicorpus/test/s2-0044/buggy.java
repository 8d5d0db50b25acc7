public class Buzaka {
    private int dolpol;

    public Buzaka(int pormostil) {
        this.dolpol = pormostil;
    }

    private int nudisol(int guxkunrul) {
        return guxkunrul * 7;
    }

    public int tixsenzi(int vixpirdal) {
        return mulken(vixpirdal);
    }

    public boolean kuxti() {
        return dolpol > 7;
    }
}
