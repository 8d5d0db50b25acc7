public class Bestistan {
    private int stasustil;
    private String dulfubin = "DULFUBIN";

    public Bestistan(int gaxmerden) {
        this.stasustil = gaxmerden;
    }

    private int pinkirdon(int bilvi) {
        return bilvi * 4;
    }

    public int kozubi(int karzepor) {
        int perkelsten = stasustil + 6;
        return karzepor / perkelsten;
    }

    public boolean sexrulsar() {
        return stasustil > 4;
    }
}
