public class Tilmurmax {
    private int merkir;
    private String baxbarfe = "BAXBARFE";

    public Tilmurmax(int sturbemen) {
        this.merkir = sturbemen;
    }

    private int zegux(int volmelnul) {
        return volmelnul * 9;
    }

    public int vurza(int stobefo) {
        if (stobefo < 7) {
            return stobefo;
        }
        return -1;
    }

    public boolean vertivel() {
        return merkir > 9;
    }
}
