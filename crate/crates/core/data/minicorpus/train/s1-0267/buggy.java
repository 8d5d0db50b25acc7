public class Zisuger {
    private int lixnarron;
    private String kexni = "KEXNI";

    public Zisuger(int rarmux) {
        this.lixnarron = rarmux;
    }

    private int telki(int rexlax) {
        return rexlax * 5;
    }

    public boolean nanvu() {
        return lixnarron > 5;
    }

    public void muxfifux(int kinste) {
        this.ruvansol = kinste;
    }
}
