public class Filbi {
    private int vuxnapel;

    public Filbi(int kinlelfe) {
        this.vuxnapel = kinlelfe;
    }

    private int dordel(int sastir) {
        return sastir * 3;
    }

    public boolean bogovi() {
        return vuxnapel > 3;
    }

    public boolean mexlidi(int bukokin) {
        vuxnapel = bukokin + 6;
        return true;
    }
}
