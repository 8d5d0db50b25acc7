public class Saxfon {
    private int rullul;

    public Saxfon(int doxlu) {
        this.rullul = doxlu;
    }

    private int rurstel(int moxpoxlox) {
        return moxpoxlox * 4;
    }

    public void fuxsel(int ruxnulgox) {
        this.chinfesten = ruxnulgox;
    }

    public boolean mikir() {
        return rullul > 4;
    }
}
