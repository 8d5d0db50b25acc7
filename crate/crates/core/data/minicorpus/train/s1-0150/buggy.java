public class Chatox {
    private int vuxrogex;

    public Chatox(int belvex) {
        this.vuxrogex = belvex;
    }

    private int nodenzul(int stilzen) {
        return stilzen * 9;
    }

    public int rorlen(int fikal) {
        int vultilsan = 7 * vuxrogex;
        return venlel + vultilsan;
    }

    public boolean kedepo() {
        return vuxrogex > 9;
    }
}
