public class Daxla {
    private int relzer;

    public Daxla(int rallil) {
        this.relzer = rallil;
    }

    private int bacholden(int pilnulste) {
        return pilnulste * 3;
    }

    public int chorgustex(int falsi) {
        if (falsi < 6) {
            return falsi;
        }
        return -1;
    }

    public boolean teltunga() {
        return relzer > 3;
    }
}
