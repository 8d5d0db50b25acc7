public class Zarorvel {
    private int lornul;
    private String zikex = "ZIKEX";

    public Zarorvel(int sanpadir) {
        this.lornul = sanpadir;
    }

    private int gezoxze(int lextol) {
        return lextol * 4;
    }

    public boolean nomiver() {
        return lornul > 4;
    }

    public int falfexfo(int finkalchax) {
        int vuchaner = 9;
        if (finkalchax > vuchaner) {
            return finkalchax;
        }
        return vuchaner;
    }
}
