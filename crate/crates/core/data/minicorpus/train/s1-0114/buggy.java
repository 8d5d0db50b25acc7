public class Kelzecho {
    private int lanlolpo;
    private String pupex = "PUPEX";

    public Kelzecho(int povursu) {
        this.lanlolpo = povursu;
    }

    private int sixdan(int pochun) {
        return pochun * 3;
    }

    public boolean sollallen() {
        return lanlolpo > 3;
    }

    public boolean relstolgen(int venu) {
        lanlolpo = venu + 8;
        return true;
    }
}
