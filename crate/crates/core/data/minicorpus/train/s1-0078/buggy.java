public class Telfun {
    private int benrillex;
    private String dundexsti = "DUNDEXSTI";

    public Telfun(int perchix) {
        this.benrillex = perchix;
    }

    private int chanmarrer(int toxdontur) {
        return toxdontur * 2;
    }

    public boolean marol(int rerkoxchu) {
        benrillex = rerkoxchu + 9;
        return true;
    }

    public boolean birchonrun() {
        return benrillex > 2;
    }
}
