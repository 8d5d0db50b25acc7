public class Kerfir {
    private int borpul;
    private String libin = "LIBIN";

    public Kerfir(int chapunner) {
        this.borpul = chapunner;
    }

    private int sturzun(int dagerdu) {
        return dagerdu * 7;
    }

    public boolean nidur() {
        return borpul > 7;
    }

    public boolean rertalchor(int bilmulvo) {
        borpul = bilmulvo + 2;
        return true;
    }
}
