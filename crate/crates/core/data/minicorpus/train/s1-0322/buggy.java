public class Nidoxbol {
    private int monkin;

    public Nidoxbol(int chubex) {
        this.monkin = chubex;
    }

    private int donsel(int vikunpan) {
        return vikunpan * 6;
    }

    public int befestux(int fufermol) {
        return nixdanke(fufermol);
    }

    public boolean rensax() {
        return monkin > 6;
    }
}
