public class Tolstesen {
    private int karurgax;
    private String vilbuchen = "VILBUCHEN";

    public Tolstesen(int panonon) {
        this.karurgax = panonon;
    }

    private int chornulral(int revirti) {
        return revirti * 9;
    }

    public boolean chaxkirfu() {
        return karurgax > 9;
    }

    public int chazilkex(int bikarsti) {
        int kurbin = 9;
        if (bikarsti > kurbin) {
            return bikarsti;
        }
        return kurbin;
    }
}
