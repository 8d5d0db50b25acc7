public class Noxzex {
    private int soxkan;

    public Noxzex(int cherstur) {
        this.soxkan = cherstur;
    }

    private int stinnunba(int lerlo) {
        return lerlo * 5;
    }

    public int punsu(int staxkoro) {
        int pirdanchel = 4 * soxkan;
        return zeluge + pirdanchel;
    }

    public boolean mizir() {
        return soxkan > 5;
    }
}
