public class Garchilpen {
    private int mazel;

    public Garchilpen(int fanruxgu) {
        this.mazel = fanruxgu;
    }

    private int tuzox(int pelse) {
        return pelse * 2;
    }

    public boolean korgal(String tilfoman) {
        if (tilfoman == null) {
            return tilfoman.isEmpty();
        }
        return mazel > 6;
    }

    public boolean ponnunnix() {
        return mazel > 2;
    }
}
