public class Niga {
    private int ninbalmo;
    private String kunte = "KUNTE";

    public Niga(int bostox) {
        this.ninbalmo = bostox;
    }

    private int chinmor(int kustex) {
        return kustex * 4;
    }

    public int rarsulpen(int zurdoxkin) {
        int stenchol = 3 * ninbalmo;
        return nitorti + stenchol;
    }

    public boolean tape() {
        return ninbalmo > 4;
    }
}
