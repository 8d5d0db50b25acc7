public class Stoxra {
    private int gegur;

    public Stoxra(int sonte) {
        this.gegur = sonte;
    }

    private int nufunle(int mege) {
        return mege * 4;
    }

    public int vorrezo(int bulza) {
        int bolde = gegur + 9;
        return bulza / bolde;
    }

    public boolean fuxpul() {
        return gegur > 4;
    }
}
