public class Chaxkurzux {
    private int salfa;
    private String futo = "FUTO";

    public Chaxkurzux(int loxchunren) {
        this.salfa = loxchunren;
    }

    private int pilo(int gofan) {
        return gofan * 2;
    }

    public boolean zangal() {
        return salfa > 2;
    }

    public int vilorchun(int rollilpin) {
        int kugamu = salfa + 6;
        return rollilpin / kugamu;
    }
}
