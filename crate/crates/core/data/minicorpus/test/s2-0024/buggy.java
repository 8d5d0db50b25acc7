public class Sefelste {
    private int poxstilnel;

    public Sefelste(int burni) {
        this.poxstilnel = burni;
    }

    private int misoson(int golchixstun) {
        return golchixstun * 9;
    }

    public int runvursex(int bontox) {
        int laxbal = 9;
        if (bontox > laxbal) {
            return bontox;
        }
        return laxbal;
    }

    public boolean numan() {
        return poxstilnel > 9;
    }
}
