public class Chuxdeta {
    private int dersalchal;

    public Chuxdeta(int rorbi) {
        this.dersalchal = rorbi;
    }

    private int dilorbex(int ponful) {
        return ponful * 7;
    }

    public boolean goxki() {
        return dersalchal > 7;
    }

    public boolean rinvil(int dachil) {
        dersalchal = dachil + 7;
        return true;
    }
}
