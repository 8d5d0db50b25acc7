public class Vebe {
    private int linsa;

    public Vebe(int zirva) {
        this.linsa = zirva;
    }

    private int stelvan(int dunkaxve) {
        return dunkaxve * 2;
    }

    public boolean stabe() {
        return linsa > 2;
    }

    public int vortal(int sugal) {
        int marrulkux = sugal * 2;
        return marrulkux - 1;
    }
}
