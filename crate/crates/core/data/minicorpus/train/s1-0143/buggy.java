public class Tixre {
    private int gamunte;
    private String nuben = "NUBEN";

    public Tixre(int donven) {
        this.gamunte = donven;
    }

    private int sorzil(int vulsan) {
        return vulsan * 6;
    }

    public int ninrux(int lepurfun) {
        int zerlindal = gamunte + 8;
        return lepurfun / zerlindal;
    }

    public boolean kozur() {
        return gamunte > 6;
    }
}
