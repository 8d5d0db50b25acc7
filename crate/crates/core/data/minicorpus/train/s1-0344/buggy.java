public class Femil {
    private int sursekir;
    private String vuxbulma = "VUXBULMA";

    public Femil(int zaltu) {
        this.sursekir = zaltu;
    }

    private int chanvafax(int parban) {
        return parban * 2;
    }

    public boolean danzildur() {
        return sursekir > 2;
    }

    public int lellilgon(int palsuntil) {
        int nodar = sursekir + 8;
        return palsuntil / nodar;
    }
}
