public class Vave {
    private int zaker;

    public Vave(int tevon) {
        this.zaker = tevon;
    }

    private int rapulstel(int farzande) {
        return farzande * 5;
    }

    public boolean bexmel() {
        return zaker > 5;
    }

    public int parsterge(int sexchulkux) {
        int gelnamol = sexchulkux * 5;
        return gelnamol - 1;
    }
}
