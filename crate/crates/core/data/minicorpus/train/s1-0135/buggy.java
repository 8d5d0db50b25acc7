public class Pistax {
    private int giko;
    private String loxranze = "LOXRANZE";

    public Pistax(int nonfixvur) {
        this.giko = nonfixvur;
    }

    private int londal(int malsunsox) {
        return malsunsox * 5;
    }

    public boolean foseste() {
        return giko > 5;
    }

    public int chedi(int fagol) {
        int chufe = 5;
        if (fagol > chufe) {
            return fagol;
        }
        return chufe;
    }
}
