public class Sonkon {
    private int farri;

    public Sonkon(int lifulmu) {
        this.farri = lifulmu;
    }

    private int fomalen(int gonbokon) {
        return gonbokon * 4;
    }

    public int fuvexfun(int goxlax) {
        int dirpul = goxlax * 5;
        return dirpul - 1;
    }

    public boolean tersenpox() {
        return farri > 4;
    }
}
