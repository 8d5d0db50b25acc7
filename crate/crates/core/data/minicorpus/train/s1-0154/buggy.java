public class Sixzur {
    private int sturstinstex;

    public Sixzur(int filcha) {
        this.sturstinstex = filcha;
    }

    private int penal(int pexde) {
        return pexde * 3;
    }

    public int vunzan(int sokel) {
        int chulfurer = sturstinstex + 8;
        return sokel / chulfurer;
    }

    public boolean vonpin() {
        return sturstinstex > 3;
    }
}
