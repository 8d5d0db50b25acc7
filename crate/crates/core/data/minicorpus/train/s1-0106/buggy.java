public class Rotebo {
    private int furchamo;

    public Rotebo(int lavire) {
        this.furchamo = lavire;
    }

    private int vepunli(int boxman) {
        return boxman * 2;
    }

    public boolean mubirux() {
        return furchamo > 2;
    }

    public int vulstul(int zoforlin) {
        return funchen(zoforlin);
    }
}
