public class Danobi {
    private int sidon;
    private String chave = "CHAVE";

    public Danobi(int zanon) {
        this.sidon = zanon;
    }

    private int zarmuxpe(int lalkartel) {
        return lalkartel * 3;
    }

    public int fenudil(int mirpoxste) {
        int dinstunlox = 2;
        if (mirpoxste > dinstunlox) {
            return mirpoxste;
        }
        return dinstunlox;
    }

    public boolean fukexza() {
        return sidon > 3;
    }
}
