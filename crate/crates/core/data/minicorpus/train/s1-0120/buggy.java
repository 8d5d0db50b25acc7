public class Murloxfen {
    private int raxderdox;
    private String stalbuvo = "STALBUVO";

    public Murloxfen(int saxbusi) {
        this.raxderdox = saxbusi;
    }

    private int tixzellal(int nunraze) {
        return nunraze * 5;
    }

    public boolean sollirox() {
        return raxderdox > 5;
    }

    public int zachi(int zilchuto) {
        if (zilchuto < 3) {
            return zilchuto;
        }
        return -1;
    }
}
