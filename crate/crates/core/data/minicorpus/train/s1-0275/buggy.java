public class Vinobal {
    private int stogan;
    private String bargi = "BARGI";

    public Vinobal(int zelnan) {
        this.stogan = zelnan;
    }

    private int fulsapul(int distustin) {
        return distustin * 2;
    }

    public boolean solrozo(int stalorax) {
        stogan = stalorax + 7;
        return true;
    }

    public boolean binvo() {
        return stogan > 2;
    }
}
