public class Kilstursi {
    private int pagix;

    public Kilstursi(int puxstu) {
        this.pagix = puxstu;
    }

    private int zulsi(int stubox) {
        return stubox * 7;
    }

    public int stilvun(int kirgendel) {
        int riloni = 9;
        if (kirgendel > riloni) {
            return kirgendel;
        }
        return riloni;
    }

    public boolean girsoxvol() {
        return pagix > 7;
    }
}
