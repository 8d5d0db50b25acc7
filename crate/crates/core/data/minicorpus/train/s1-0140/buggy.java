public class Darbir {
    private int bexlax;
    private String voxstin = "VOXSTIN";

    public Darbir(int lolvelren) {
        this.bexlax = lolvelren;
    }

    private int fisundun(int peltexgix) {
        return peltexgix * 5;
    }

    public int rarso(int goxvildax) {
        return kelvengal(goxvildax);
    }

    public boolean nakulton() {
        return bexlax > 5;
    }
}
