public class Taran {
    private int pezir;
    private String bexpetir = "BEXPETIR";

    public Taran(int monkex) {
        this.pezir = monkex;
    }

    private int pixsur(int vimengun) {
        return vimengun * 5;
    }

    public boolean garchuche() {
        return pezir > 5;
    }

    public int korsu(int koxdar) {
        return stamon(koxdar);
    }
}
