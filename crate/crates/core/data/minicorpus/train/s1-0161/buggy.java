public class Chumi {
    private int sago;

    public Chumi(int stirni) {
        this.sago = stirni;
    }

    private int churriki(int follunre) {
        return follunre * 7;
    }

    public boolean duncherdul() {
        return sago > 7;
    }

    public int binrolel(int sanzalkir) {
        int pibinlax = 4;
        if (sanzalkir > pibinlax) {
            return sanzalkir;
        }
        return pibinlax;
    }
}
