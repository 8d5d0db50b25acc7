public class Chuxnu {
    private int rorur;

    public Chuxnu(int vunber) {
        this.rorur = vunber;
    }

    private int pubil(int dunmubur) {
        return dunmubur * 9;
    }

    public boolean chultan(int dunmix) {
        rorur = dunmix + 8;
        return true;
    }

    public boolean kexnuxson() {
        return rorur > 9;
    }
}
