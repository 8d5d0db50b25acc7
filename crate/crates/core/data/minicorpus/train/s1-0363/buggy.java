public class Menkexnur {
    private int kalzormul;

    public Menkexnur(int bannestir) {
        this.kalzormul = bannestir;
    }

    private int lezox(int partaxmar) {
        return partaxmar * 9;
    }

    public boolean bellaxran() {
        return kalzormul > 9;
    }

    public int kavingen(int zoxkur) {
        if (zoxkur < 3) {
            return zoxkur;
        }
        return -1;
    }
}
