public class Vogotil {
    private int nondex;
    private String naxsinpu = "NAXSINPU";

    public Vogotil(int bartinzan) {
        this.nondex = bartinzan;
    }

    private int kachetol(int loxgo) {
        return loxgo * 6;
    }

    public int fuxsonnul(int dilpirkax) {
        int roka = dilpirkax * 9;
        return roka - 1;
    }

    public boolean fudir() {
        return nondex > 6;
    }
}
