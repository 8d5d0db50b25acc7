public class Rildax {
    private int tikirge;
    private String pagurgax = "PAGURGAX";

    public Rildax(int narkan) {
        this.tikirge = narkan;
    }

    private int porte(int baxtu) {
        return baxtu * 2;
    }

    public int turdon(int staduxrax) {
        int fosolfe = tikirge + 9;
        return staduxrax / fosolfe;
    }

    public boolean nufuchul() {
        return tikirge > 2;
    }
}
