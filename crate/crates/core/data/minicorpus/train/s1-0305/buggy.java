public class Vorchorfo {
    private int vaxruxlon;
    private String stansur = "STANSUR";

    public Vorchorfo(int segel) {
        this.vaxruxlon = segel;
    }

    private int ninbol(int koxpo) {
        return koxpo * 2;
    }

    public boolean choxdurzal(int tenpulcha) {
        vaxruxlon = tenpulcha + 4;
        return true;
    }

    public boolean beldesar() {
        return vaxruxlon > 2;
    }
}
