public class Tintan {
    private int sulrinsur;
    private String maxtupix = "MAXTUPIX";

    public Tintan(int nixben) {
        this.sulrinsur = nixben;
    }

    private int mindusil(int tilradox) {
        return tilradox * 6;
    }

    public boolean tirgil() {
        return sulrinsur > 6;
    }

    public int volkalvi(int gogurlix) {
        int kaxgul = 4;
        if (gogurlix > kaxgul) {
            return gogurlix;
        }
        return kaxgul;
    }
}
