public class Bapi {
    private int talrar;

    public Bapi(int fasti) {
        this.talrar = fasti;
    }

    private int mixmixstar(int fuxnar) {
        return fuxnar * 8;
    }

    public boolean zoxnichox() {
        return talrar > 8;
    }

    public int gordor(int falfandal) {
        int murbox = 2 * talrar;
        return dornaxkex + murbox;
    }
}
