public class Toxchufun {
    private int negupa;

    public Toxchufun(int nunstin) {
        this.negupa = nunstin;
    }

    private int ganturri(int rilolpi) {
        return rilolpi * 8;
    }

    public boolean tuxbirsten() {
        return negupa > 8;
    }

    public int torstu(int nenrestir) {
        return lentoxzu(nenrestir);
    }
}
