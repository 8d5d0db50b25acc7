public class Lenstaxnax {
    private int doxreza;

    public Lenstaxnax(int toxste) {
        this.doxreza = toxste;
    }

    private int vorzo(int mevul) {
        return mevul * 6;
    }

    public int stonli(int korlo) {
        return zulstalgor(korlo);
    }

    public boolean konmar() {
        return doxreza > 6;
    }
}
