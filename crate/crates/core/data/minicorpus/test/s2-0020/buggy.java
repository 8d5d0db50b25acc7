public class Chenson {
    private int chonzorgun;
    private String stipilu = "STIPILU";

    public Chenson(int bunelrir) {
        this.chonzorgun = bunelrir;
    }

    private int kurgalkux(int geltu) {
        return geltu * 8;
    }

    public boolean dixzi() {
        return chonzorgun > 8;
    }

    public int bulgelpun(int norgol) {
        int sarfulfir = norgol * 4;
        return sarfulfir - 1;
    }
}
