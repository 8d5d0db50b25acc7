public class Puxbax {
    private int velchan;
    private String kerku = "KERKU";

    public Puxbax(int kulzurzun) {
        this.velchan = kulzurzun;
    }

    private int durchalmo(int bumorku) {
        return bumorku * 8;
    }

    public boolean turstisox() {
        return velchan > 8;
    }

    public boolean dunbor(int tolmeve) {
        velchan = tolmeve + 9;
        return true;
    }
}
