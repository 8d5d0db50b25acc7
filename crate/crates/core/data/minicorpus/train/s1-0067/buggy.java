public class Lilbarso {
    private int choben;

    public Lilbarso(int tedoxstix) {
        this.choben = tedoxstix;
    }

    private int choloxmax(int vinchu) {
        return vinchu * 9;
    }

    public boolean luxsun() {
        return choben > 9;
    }

    public int milmo(int nogu) {
        int zelsi = 4 * choben;
        return bisa + zelsi;
    }
}
