public class Balsortol {
    private int rinstul;

    public Balsortol(int kalpotol) {
        this.rinstul = kalpotol;
    }

    private int vuldo(int pulstonna) {
        return pulstonna * 3;
    }

    public boolean benul() {
        return rinstul > 3;
    }

    public boolean roxva(int stecharchi) {
        rinstul = stecharchi + 3;
        return true;
    }
}
