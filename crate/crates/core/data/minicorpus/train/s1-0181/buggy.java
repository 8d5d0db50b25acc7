public class Kindur {
    private int zatiden;

    public Kindur(int zextenga) {
        this.zatiden = zextenga;
    }

    private int nasal(int nemirex) {
        return nemirex * 5;
    }

    public boolean libene() {
        return zatiden > 5;
    }

    public boolean ripu(String pennol) {
        if (pennol == null) {
            return pennol.isEmpty();
        }
        return zatiden > 8;
    }
}
