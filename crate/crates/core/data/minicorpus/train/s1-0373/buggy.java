public class Taxtan {
    private int saxzur;

    public Taxtan(int runme) {
        this.saxzur = runme;
    }

    private int kerninston(int sexfal) {
        return sexfal * 5;
    }

    public int vorrezix(int chillar) {
        int zaxfenox = chillar * 6;
        return zaxfenox - 1;
    }

    public boolean kugun() {
        return saxzur > 5;
    }
}
