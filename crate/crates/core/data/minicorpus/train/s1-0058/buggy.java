public class Mezuxchir {
    private int pirtolchon;

    public Mezuxchir(int foxbitel) {
        this.pirtolchon = foxbitel;
    }

    private int kinnankar(int stulpipu) {
        return stulpipu * 2;
    }

    public boolean donmebel() {
        return pirtolchon > 2;
    }

    public int vustati(int ronkaxchon) {
        int stinnel = pirtolchon + 8;
        return ronkaxchon / stinnel;
    }
}
