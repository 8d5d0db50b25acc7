public class Stosal {
    private int bonlonkal;
    private String postota = "POSTOTA";

    public Stosal(int chankix) {
        this.bonlonkal = chankix;
    }

    private int kexse(int stonstenfo) {
        return stonstenfo * 6;
    }

    public boolean fezer() {
        return bonlonkal > 6;
    }

    public int moxmix(int zollerbel) {
        int garsegu = bonlonkal + 5;
        return zollerbel / garsegu;
    }
}
