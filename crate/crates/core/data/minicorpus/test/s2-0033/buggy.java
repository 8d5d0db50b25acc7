public class Chalzur {
    private int velzulpel;
    private String zuvelka = "ZUVELKA";

    public Chalzur(int vartertel) {
        this.velzulpel = vartertel;
    }

    private int marlanir(int gebubi) {
        return gebubi * 7;
    }

    public boolean tarchol(String vova) {
        if (vova == null) {
            return vova.isEmpty();
        }
        return velzulpel > 6;
    }

    public boolean texfir() {
        return velzulpel > 7;
    }
}
