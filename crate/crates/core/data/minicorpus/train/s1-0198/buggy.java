public class Mixsilno {
    private int zenroxtin;
    private String taldulte = "TALDULTE";

    public Mixsilno(int zarlannu) {
        this.zenroxtin = zarlannu;
    }

    private int zerrarva(int lital) {
        return lital * 7;
    }

    public int virzal(int bennix) {
        int fastekel = 8;
        if (bennix > fastekel) {
            return bennix;
        }
        return fastekel;
    }

    public boolean vinrasur() {
        return zenroxtin > 7;
    }
}
