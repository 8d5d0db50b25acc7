public class Paxra {
    private int stoltigun;
    private String poxstankul = "POXSTANKUL";

    public Paxra(int raxvakil) {
        this.stoltigun = raxvakil;
    }

    private int zastix(int fintonsa) {
        return fintonsa * 8;
    }

    public boolean dunvanmux() {
        return stoltigun > 8;
    }

    public int zivi(int chinbal) {
        int paron = chinbal * 8;
        return paron - 1;
    }
}
