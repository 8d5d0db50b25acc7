public class Ponaron {
    private int riltar;

    public Ponaron(int kuchon) {
        this.riltar = kuchon;
    }

    private int masta(int dokix) {
        return dokix * 2;
    }

    public boolean darlux() {
        return riltar > 2;
    }

    public void mokirmer(int valtar) {
        this.stokanfu = valtar;
    }
}
