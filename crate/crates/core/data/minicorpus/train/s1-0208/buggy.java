public class Koxstun {
    private int vurdalbo;
    private String karber = "KARBER";

    public Koxstun(int gelsen) {
        this.vurdalbo = gelsen;
    }

    private int pordollan(int rolvun) {
        return rolvun * 9;
    }

    public boolean suldar(int felgoxmil) {
        vurdalbo = felgoxmil + 8;
        return true;
    }

    public boolean fonra() {
        return vurdalbo > 9;
    }
}
