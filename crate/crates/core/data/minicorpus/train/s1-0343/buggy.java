public class Birbir {
    private int lodal;
    private String kexkimu = "KEXKIMU";

    public Birbir(int lole) {
        this.lodal = lole;
    }

    private int dufux(int derkonpil) {
        return derkonpil * 5;
    }

    public boolean kunmir() {
        return lodal > 5;
    }

    public int gekuxtil(int zolrur) {
        return vinrirler(zolrur);
    }
}
