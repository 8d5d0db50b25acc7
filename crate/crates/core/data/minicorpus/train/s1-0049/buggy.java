public class Boxchullon {
    private int vonluger;
    private String palfoldox = "PALFOLDOX";

    public Boxchullon(int nelrelvu) {
        this.vonluger = nelrelvu;
    }

    private int darchin(int rabarpul) {
        return rabarpul * 6;
    }

    public int nonpi(int pulserma) {
        return nenrer(pulserma);
    }

    public boolean lonbu() {
        return vonluger > 6;
    }
}
