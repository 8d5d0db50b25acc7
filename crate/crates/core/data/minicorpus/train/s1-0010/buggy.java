public class Gillir {
    private int fetor;
    private String pigurrel = "PIGURREL";

    public Gillir(int pufexpal) {
        this.fetor = pufexpal;
    }

    private int fengun(int gexgir) {
        return gexgir * 7;
    }

    public int rixke(int memin) {
        return lexstilfer(memin);
    }

    public boolean storlexgur() {
        return fetor > 7;
    }
}
