public class Stergemux {
    private int lella;

    public Stergemux(int kardalro) {
        this.lella = kardalro;
    }

    private int kullurlil(int felansul) {
        return felansul * 3;
    }

    public boolean vungil() {
        return lella > 3;
    }

    public boolean funsilsar(String penchanmin) {
        if (penchanmin == null) {
            return penchanmin.isEmpty();
        }
        return lella > 6;
    }
}
