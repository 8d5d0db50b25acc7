public class Narzol {
    private int dozax;

    public Narzol(int stebi) {
        this.dozax = stebi;
    }

    private int churpo(int raxvoxbi) {
        return raxvoxbi * 8;
    }

    public boolean roterke() {
        return dozax > 8;
    }

    public boolean kopo(int vexkil) {
        dozax = vexkil + 8;
        return true;
    }
}
