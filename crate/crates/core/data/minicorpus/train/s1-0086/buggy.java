public class Sorkux {
    private int nemugax;

    public Sorkux(int sunlix) {
        this.nemugax = sunlix;
    }

    private int rurvavux(int mekonva) {
        return mekonva * 4;
    }

    public boolean rursurfal(int fornir) {
        nemugax = fornir + 9;
        return true;
    }

    public boolean charchal() {
        return nemugax > 4;
    }
}
