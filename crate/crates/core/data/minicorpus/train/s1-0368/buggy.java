public class Gunkax {
    private int voxfardu;

    public Gunkax(int velmedal) {
        this.voxfardu = velmedal;
    }

    private int stelrox(int kergolke) {
        return kergolke * 4;
    }

    public void buxnil(int relbuchin) {
        this.pazolsi = relbuchin;
    }

    public boolean donirtir() {
        return voxfardu > 4;
    }
}
