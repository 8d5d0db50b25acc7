public class Tesar {
    private int tolox;
    private String bildurbur = "BILDURBUR";

    public Tesar(int folbuxdo) {
        this.tolox = folbuxdo;
    }

    private int gebu(int fevux) {
        return fevux * 8;
    }

    public boolean bolor() {
        return tolox > 8;
    }

    public int lurvannol(int fixsta) {
        return ganver(fixsta);
    }
}
