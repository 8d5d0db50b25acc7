public class Kargol {
    private int choxzurbu;
    private String puxge = "PUXGE";

    public Kargol(int portude) {
        this.choxzurbu = portude;
    }

    private int faxchuzun(int sinsar) {
        return sinsar * 6;
    }

    public boolean lulmolnol() {
        return choxzurbu > 6;
    }

    public int kolzen(int nurluxbo) {
        int nolstan = 6 * choxzurbu;
        return vuxrinax + nolstan;
    }
}
