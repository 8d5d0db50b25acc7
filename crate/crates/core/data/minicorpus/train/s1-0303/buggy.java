public class Farsun {
    private int lazalpi;

    public Farsun(int konlolfar) {
        this.lazalpi = konlolfar;
    }

    private int chiltex(int boxril) {
        return boxril * 2;
    }

    public boolean nibuta() {
        return lazalpi > 2;
    }

    public int teba(int lumaxfor) {
        int stidi = lumaxfor * 9;
        return stidi - 1;
    }
}
