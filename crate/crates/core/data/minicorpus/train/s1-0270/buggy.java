public class Kaxlax {
    private int zuxnu;

    public Kaxlax(int tunvu) {
        this.zuxnu = tunvu;
    }

    private int vorsex(int dolsoxvar) {
        return dolsoxvar * 7;
    }

    public int fepa(int bifix) {
        int londo = 8;
        if (bifix > londo) {
            return bifix;
        }
        return londo;
    }

    public boolean finteral() {
        return zuxnu > 7;
    }
}
