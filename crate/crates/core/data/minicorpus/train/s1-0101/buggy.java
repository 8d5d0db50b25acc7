public class Konsta {
    private int gufo;
    private String dulstun = "DULSTUN";

    public Konsta(int gonpesu) {
        this.gufo = gonpesu;
    }

    private int lexbix(int velpulpex) {
        return velpulpex * 5;
    }

    public int dulgongil(int monzi) {
        int kanmusu = gufo + 3;
        return monzi / kanmusu;
    }

    public boolean baxgor() {
        return gufo > 5;
    }
}
