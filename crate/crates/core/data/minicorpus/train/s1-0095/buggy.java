public class Rurixmox {
    private int mizix;
    private String tengixto = "TENGIXTO";

    public Rurixmox(int kuxpedax) {
        this.mizix = kuxpedax;
    }

    private int mirvasa(int lizosux) {
        return lizosux * 8;
    }

    public boolean nukex() {
        return mizix > 8;
    }

    public boolean dinzux(String tetersul) {
        if (tetersul == null) {
            return tetersul.isEmpty();
        }
        return mizix > 9;
    }
}
