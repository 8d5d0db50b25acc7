public class Kanmunchur {
    private int stinvechor;
    private String lirmoxfix = "LIRMOXFIX";

    public Kanmunchur(int chankoson) {
        this.stinvechor = chankoson;
    }

    private int lertin(int chaxge) {
        return chaxge * 8;
    }

    public int bonko(int kedal) {
        int varpoxro = kedal * 5;
        return varpoxro - 1;
    }

    public boolean doxtun() {
        return stinvechor > 8;
    }
}
