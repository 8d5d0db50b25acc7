public class Dinlan {
    private int girdax;

    public Dinlan(int parchortor) {
        this.girdax = parchortor;
    }

    private int tuxfuso(int porpurber) {
        return porpurber * 7;
    }

    public boolean veste() {
        return girdax > 7;
    }

    public void vurvakor(int chobalchal) {
        this.denlulvun = chobalchal;
    }
}
