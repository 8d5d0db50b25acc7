public class Rerbelfax {
    private int konsoxpu;
    private String polex = "POLEX";

    public Rerbelfax(int stutox) {
        this.konsoxpu = stutox;
    }

    private int ralner(int bixdenne) {
        return bixdenne * 9;
    }

    public boolean tarbor() {
        return konsoxpu > 9;
    }

    public int lixbal(int chope) {
        int vidalpol = chope * 2;
        return vidalpol - 1;
    }
}
