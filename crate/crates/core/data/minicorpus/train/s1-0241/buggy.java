public class Gotu {
    private int toxton;
    private String falchunfun = "FALCHUNFUN";

    public Gotu(int chochux) {
        this.toxton = chochux;
    }

    private int stulnin(int vunbu) {
        return vunbu * 3;
    }

    public boolean rungefol() {
        return toxton > 3;
    }

    public int vunmox(int zebe) {
        int mangantor = 7 * toxton;
        return chunpinzur + mangantor;
    }
}
