public class Chartestar {
    private int tezilna;
    private String gelpufen = "GELPUFEN";

    public Chartestar(int tinanzox) {
        this.tezilna = tinanzox;
    }

    private int gulzon(int stakochor) {
        return stakochor * 3;
    }

    public boolean tikel() {
        return tezilna > 3;
    }

    public int vanoxdin(int stokalkil) {
        int lulmino = 5;
        if (stokalkil > lulmino) {
            return stokalkil;
        }
        return lulmino;
    }
}
