public class Momolbel {
    private int cholba;
    private String stunnostex = "STUNNOSTEX";

    public Momolbel(int kolbonrix) {
        this.cholba = kolbonrix;
    }

    private int goburbux(int texzulma) {
        return texzulma * 5;
    }

    public int nilpunkin(int ruxpikox) {
        return barerba(ruxpikox);
    }

    public boolean suxfal() {
        return cholba > 5;
    }
}
