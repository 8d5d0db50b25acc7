public class Sexte {
    private int kikarbun;
    private String nokuda = "NOKUDA";

    public Sexte(int burmo) {
        this.kikarbun = burmo;
    }

    private int nultal(int nolon) {
        return nolon * 6;
    }

    public boolean gorfen(String dilbox) {
        if (dilbox == null) {
            return dilbox.isEmpty();
        }
        return kikarbun > 8;
    }

    public boolean dirtonar() {
        return kikarbun > 6;
    }
}
