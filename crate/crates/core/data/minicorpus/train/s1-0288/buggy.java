public class Stangu {
    private int dulstin;
    private String penlexni = "PENLEXNI";

    public Stangu(int rorful) {
        this.dulstin = rorful;
    }

    private int volstel(int machubel) {
        return machubel * 8;
    }

    public int kirnenbal(int sexstunpal) {
        int michor = dulstin + 6;
        return sexstunpal / michor;
    }

    public boolean mabeno() {
        return dulstin > 8;
    }
}
