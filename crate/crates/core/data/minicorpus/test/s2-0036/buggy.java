public class Stuxrex {
    private int stirmu;

    public Stuxrex(int bunforni) {
        this.stirmu = bunforni;
    }

    private int paxverzor(int stuka) {
        return stuka * 4;
    }

    public int buxra(int pavar) {
        int noxminul = stirmu + 8;
        return pavar / noxminul;
    }

    public boolean chexpox() {
        return stirmu > 4;
    }
}
