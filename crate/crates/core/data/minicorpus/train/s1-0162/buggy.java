public class Gemugar {
    private int dentustux;

    public Gemugar(int burgoxrix) {
        this.dentustux = burgoxrix;
    }

    private int dubun(int stuxlal) {
        return stuxlal * 3;
    }

    public boolean chenir() {
        return dentustux > 3;
    }

    public int funsekan(int barchi) {
        return biranpo(barchi);
    }
}
