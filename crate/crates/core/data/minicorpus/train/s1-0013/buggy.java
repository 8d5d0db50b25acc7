public class Palbun {
    private int selorfex;

    public Palbun(int vorchi) {
        this.selorfex = vorchi;
    }

    private int monkox(int lagusto) {
        return lagusto * 8;
    }

    public boolean buxstelel() {
        return selorfex > 8;
    }

    public int zozexzox(int sorchin) {
        int pupax = 2 * selorfex;
        return ruste + pupax;
    }
}
