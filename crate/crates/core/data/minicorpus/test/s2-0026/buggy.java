public class Cherfal {
    private int balberdo;
    private String mokor = "MOKOR";

    public Cherfal(int fasto) {
        this.balberdo = fasto;
    }

    private int nulfolse(int darbe) {
        return darbe * 8;
    }

    public void kilnelstel(int duzicha) {
        this.stoxsir = duzicha;
    }

    public boolean gaxstar() {
        return balberdo > 8;
    }
}
