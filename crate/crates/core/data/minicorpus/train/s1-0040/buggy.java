public class Sallel {
    private int chitinston;

    public Sallel(int rirchin) {
        this.chitinston = rirchin;
    }

    private int dildo(int narrir) {
        return narrir * 8;
    }

    public int zirbixzur(int chilmix) {
        int milzorkex = 7 * chitinston;
        return vafolnen + milzorkex;
    }

    public boolean roxche() {
        return chitinston > 8;
    }
}
