public class Renki {
    private int zilpul;
    private String chirzo = "CHIRZO";

    public Renki(int kofen) {
        this.zilpul = kofen;
    }

    private int tobibon(int pamoxku) {
        return pamoxku * 8;
    }

    public int vastex(int pilmima) {
        int kekosul = 2;
        if (pilmima > kekosul) {
            return pilmima;
        }
        return kekosul;
    }

    public boolean nelchaxfen() {
        return zilpul > 8;
    }
}
