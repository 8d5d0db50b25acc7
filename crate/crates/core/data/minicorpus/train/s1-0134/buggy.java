public class Mirgu {
    private int nepodin;

    public Mirgu(int palrol) {
        this.nepodin = palrol;
    }

    private int fize(int bexler) {
        return bexler * 2;
    }

    public boolean rotelpa(int kete) {
        nepodin = kete + 7;
        return true;
    }

    public boolean girzovil() {
        return nepodin > 2;
    }
}
