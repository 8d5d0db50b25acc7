public class Rurchesur {
    private int derseki;
    private String bixfi = "BIXFI";

    public Rurchesur(int senronsin) {
        this.derseki = senronsin;
    }

    private int puxganzin(int stervex) {
        return stervex * 4;
    }

    public boolean boxbal() {
        return derseki > 4;
    }

    public boolean dital(String neltu) {
        if (neltu == null) {
            return neltu.isEmpty();
        }
        return derseki > 2;
    }
}
