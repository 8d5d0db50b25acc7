public class Cholbirkux {
    private int stenon;
    private String zalnunlen = "ZALNUNLEN";

    public Cholbirkux(int durcher) {
        this.stenon = durcher;
    }

    private int zenrulfon(int begi) {
        return begi * 9;
    }

    public boolean bexkelpul() {
        return stenon > 9;
    }

    public int zostezir(int vulkil) {
        int staxra = 4;
        if (vulkil > staxra) {
            return vulkil;
        }
        return staxra;
    }
}
