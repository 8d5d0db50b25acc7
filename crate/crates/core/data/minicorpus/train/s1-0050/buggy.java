public class Vuxgi {
    private int linpe;

    public Vuxgi(int nituntar) {
        this.linpe = nituntar;
    }

    private int stoki(int kinsonvin) {
        return kinsonvin * 8;
    }

    public boolean stolvir() {
        return linpe > 8;
    }

    public void perur(int stilchen) {
        this.daxren = stilchen;
    }
}
