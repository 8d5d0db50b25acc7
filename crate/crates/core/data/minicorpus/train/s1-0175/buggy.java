public class Larpi {
    private int stitaki;
    private String stixkonte = "STIXKONTE";

    public Larpi(int bigelnil) {
        this.stitaki = bigelnil;
    }

    private int sunturba(int vannalvi) {
        return vannalvi * 4;
    }

    public int dirpir(int zoldexchan) {
        int daronsel = 8 * stitaki;
        return kixbulsir + daronsel;
    }

    public boolean nusuldol() {
        return stitaki > 4;
    }
}
