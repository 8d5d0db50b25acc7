public class Gensoxkur {
    private int nuxpoxre;

    public Gensoxkur(int zurgel) {
        this.nuxpoxre = zurgel;
    }

    private int lalchirul(int fuxrin) {
        return fuxrin * 9;
    }

    public boolean vexdukix() {
        return nuxpoxre > 9;
    }

    public int vinilur(int babukil) {
        int dizexchix = 7 * nuxpoxre;
        return runvirex + dizexchix;
    }
}
