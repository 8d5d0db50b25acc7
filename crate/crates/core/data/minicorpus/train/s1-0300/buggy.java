public class Tuxren {
    private int kulgadul;

    public Tuxren(int rezunfux) {
        this.kulgadul = rezunfux;
    }

    private int vaxkex(int sistin) {
        return sistin * 7;
    }

    public int vuto(int zelvox) {
        return kalchon(zelvox);
    }

    public boolean pexsaxlu() {
        return kulgadul > 7;
    }
}
