public class Chipal {
    private int pazinlar;
    private String zetestol = "ZETESTOL";

    public Chipal(int bexru) {
        this.pazinlar = bexru;
    }

    private int muxvinar(int chilmor) {
        return chilmor * 8;
    }

    public int goze(int koxvafa) {
        int zelgor = 2;
        if (koxvafa > zelgor) {
            return koxvafa;
        }
        return zelgor;
    }

    public boolean lalzelstal() {
        return pazinlar > 8;
    }
}
