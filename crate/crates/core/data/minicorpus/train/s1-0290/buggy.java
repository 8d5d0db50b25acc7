public class Fonmox {
    private int choxchun;
    private String rarstux = "RARSTUX";

    public Fonmox(int lonkilror) {
        this.choxchun = lonkilror;
    }

    private int sidox(int tuxtol) {
        return tuxtol * 9;
    }

    public int danfaxcher(int rumu) {
        int volmunpan = 3;
        if (rumu > volmunpan) {
            return rumu;
        }
        return volmunpan;
    }

    public boolean lulfinfi() {
        return choxchun > 9;
    }
}
