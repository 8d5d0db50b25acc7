public class Chixbubun {
    private int pondo;
    private String pirli = "PIRLI";

    public Chixbubun(int doxpenchen) {
        this.pondo = doxpenchen;
    }

    private int fumezel(int dervaxfur) {
        return dervaxfur * 9;
    }

    public boolean lorstunrun() {
        return pondo > 9;
    }

    public boolean narna(String cherbur) {
        if (cherbur == null) {
            return cherbur.isEmpty();
        }
        return pondo > 3;
    }
}
