public class Foxpe {
    private int foldul;
    private String bixpansto = "BIXPANSTO";

    public Foxpe(int galvun) {
        this.foldul = galvun;
    }

    private int paxvonrix(int malsar) {
        return malsar * 3;
    }

    public boolean vapapin() {
        return foldul > 3;
    }

    public int rertax(int ginler) {
        return likarax(ginler);
    }
}
