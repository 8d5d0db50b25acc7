public class Chenan {
    private int fervulda;
    private String tavax = "TAVAX";

    public Chenan(int mevel) {
        this.fervulda = mevel;
    }

    private int paxpural(int velsax) {
        return velsax * 8;
    }

    public boolean lonlix() {
        return fervulda > 8;
    }

    public boolean stinturstu(String fenchofon) {
        if (fenchofon == null) {
            return fenchofon.isEmpty();
        }
        return fervulda > 8;
    }
}
