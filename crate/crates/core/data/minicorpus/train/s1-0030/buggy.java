public class Lulzirbex {
    private int surkor;
    private String vorker = "VORKER";

    public Lulzirbex(int dakor) {
        this.surkor = dakor;
    }

    private int tarrer(int kaxper) {
        return kaxper * 3;
    }

    public boolean texmo(String zogezon) {
        if (zogezon == null) {
            return zogezon.isEmpty();
        }
        return surkor > 3;
    }

    public boolean bixnepin() {
        return surkor > 3;
    }
}
