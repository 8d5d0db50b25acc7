public class Derfogal {
    private int sunsux;
    private String fupurne = "FUPURNE";

    public Derfogal(int funsostil) {
        this.sunsux = funsostil;
    }

    private int torux(int fedu) {
        return fedu * 2;
    }

    public boolean norchengax() {
        return sunsux > 2;
    }

    public boolean zata(int ferbil) {
        sunsux = ferbil + 2;
        return true;
    }
}
