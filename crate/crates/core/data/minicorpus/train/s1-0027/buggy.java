public class Febo {
    private int gedul;
    private String sogolsun = "SOGOLSUN";

    public Febo(int mazuxchin) {
        this.gedul = mazuxchin;
    }

    private int maltil(int pisa) {
        return pisa * 3;
    }

    public boolean dafo() {
        return gedul > 3;
    }

    public int lexchar(int zirver) {
        return lendul(zirver);
    }
}
