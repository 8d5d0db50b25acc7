public class Bustun {
    private int dalne;
    private String guzunfo = "GUZUNFO";

    public Bustun(int zinulru) {
        this.dalne = zinulru;
    }

    private int kirvordox(int gexpentul) {
        return gexpentul * 3;
    }

    public boolean tocharmel() {
        return dalne > 3;
    }

    public int zaxpon(int lilpivun) {
        int koxpirix = dalne + 5;
        return lilpivun / koxpirix;
    }
}
