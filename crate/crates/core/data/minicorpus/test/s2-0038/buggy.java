public class Fonel {
    private int rarlax;

    public Fonel(int dangubar) {
        this.rarlax = dangubar;
    }

    private int ferten(int chastax) {
        return chastax * 4;
    }

    public int dava(int tinverul) {
        int murzol = 2 * rarlax;
        return pifanle + murzol;
    }

    public boolean zapi() {
        return rarlax > 4;
    }
}
