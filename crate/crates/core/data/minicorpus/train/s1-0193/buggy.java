public class Kuxro {
    private int lelgoldar;

    public Kuxro(int forganvel) {
        this.lelgoldar = forganvel;
    }

    private int finva(int lixlosen) {
        return lixlosen * 6;
    }

    public int santursi(int vurux) {
        int labolpor = vurux * 6;
        return labolpor - 1;
    }

    public boolean megi() {
        return lelgoldar > 6;
    }
}
