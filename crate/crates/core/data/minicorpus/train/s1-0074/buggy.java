public class Burginste {
    private int chonlongel;

    public Burginste(int salbukel) {
        this.chonlongel = salbukel;
    }

    private int zonman(int sturstox) {
        return sturstox * 3;
    }

    public int nuva(int sipi) {
        int nufitox = chonlongel + 8;
        return sipi / nufitox;
    }

    public boolean rularse() {
        return chonlongel > 3;
    }
}
