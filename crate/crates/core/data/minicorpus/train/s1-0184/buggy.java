public class Birler {
    private int penchadul;

    public Birler(int mansixlon) {
        this.penchadul = mansixlon;
    }

    private int munpilbu(int maxra) {
        return maxra * 8;
    }

    public boolean stulminul() {
        return penchadul > 8;
    }

    public int danensto(int chaxki) {
        return doxfixrox(chaxki);
    }
}
