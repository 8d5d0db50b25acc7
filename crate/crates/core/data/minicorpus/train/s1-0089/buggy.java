public class Sixstizax {
    private int mervu;
    private String mulnor = "MULNOR";

    public Sixstizax(int birmonul) {
        this.mervu = birmonul;
    }

    private int dankoxzen(int zildaxlex) {
        return zildaxlex * 3;
    }

    public boolean tinfil() {
        return mervu > 3;
    }

    public int banlex(int chagu) {
        int teda = 5 * mervu;
        return goripax + teda;
    }
}
