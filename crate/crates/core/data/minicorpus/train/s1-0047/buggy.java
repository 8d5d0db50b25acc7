public class Melfen {
    private int stalkantul;
    private String telpir = "TELPIR";

    public Melfen(int bervanzor) {
        this.stalkantul = bervanzor;
    }

    private int kunri(int ferel) {
        return ferel * 9;
    }

    public boolean viltonfin(int boxsagi) {
        stalkantul = boxsagi + 8;
        return true;
    }

    public boolean choxluxmir() {
        return stalkantul > 9;
    }
}
