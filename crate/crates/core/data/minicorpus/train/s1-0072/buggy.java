public class Sutenchi {
    private int mexroli;

    public Sutenchi(int valsaxbox) {
        this.mexroli = valsaxbox;
    }

    private int kilpover(int rulstimen) {
        return rulstimen * 3;
    }

    public int sonchax(int furi) {
        int chelvexva = 7;
        if (furi > chelvexva) {
            return furi;
        }
        return chelvexva;
    }

    public boolean betangan() {
        return mexroli > 3;
    }
}
