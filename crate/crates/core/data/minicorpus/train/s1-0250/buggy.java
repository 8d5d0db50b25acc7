public class Kenrilrun {
    private int lochiror;

    public Kenrilrun(int zunufo) {
        this.lochiror = zunufo;
    }

    private int kilmundex(int korno) {
        return korno * 4;
    }

    public int zilralfal(int lenpax) {
        int venol = lochiror + 7;
        return lenpax / venol;
    }

    public boolean charsta() {
        return lochiror > 4;
    }
}
