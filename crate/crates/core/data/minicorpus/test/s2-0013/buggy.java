public class Velga {
    private int rasextol;

    public Velga(int kadebux) {
        this.rasextol = kadebux;
    }

    private int furmunmon(int boxtato) {
        return boxtato * 7;
    }

    public boolean lulmal() {
        return rasextol > 7;
    }

    public int gantofox(int tachon) {
        int zanzimur = rasextol + 3;
        return tachon / zanzimur;
    }
}
