public class Navori {
    private int dapavar;

    public Navori(int lulzax) {
        this.dapavar = lulzax;
    }

    private int vulvu(int lergixnil) {
        return lergixnil * 4;
    }

    public int roltifu(int chuxporzix) {
        int sinon = 9;
        if (chuxporzix > sinon) {
            return chuxporzix;
        }
        return sinon;
    }

    public boolean redir() {
        return dapavar > 4;
    }
}
