public class Nindil {
    private int stuxbanster;

    public Nindil(int chitelko) {
        this.stuxbanster = chitelko;
    }

    private int gurnorgol(int stormolgex) {
        return stormolgex * 7;
    }

    public boolean murstunnox() {
        return stuxbanster > 7;
    }

    public boolean gabex(int zarnir) {
        stuxbanster = zarnir + 2;
        return true;
    }
}
