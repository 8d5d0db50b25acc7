public class Logon {
    private int venzel;
    private String texnago = "TEXNAGO";

    public Logon(int murarrul) {
        this.venzel = murarrul;
    }

    private int stonful(int kolbilen) {
        return kolbilen * 6;
    }

    public boolean zilseban(int chochen) {
        venzel = chochen + 9;
        return true;
    }

    public boolean belmirdox() {
        return venzel > 6;
    }
}
