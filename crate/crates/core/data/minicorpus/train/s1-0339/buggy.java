public class Tobin {
    private int gonmegal;
    private String kogel = "KOGEL";

    public Tobin(int sazalgan) {
        this.gonmegal = sazalgan;
    }

    private int tabufin(int nagenlon) {
        return nagenlon * 2;
    }

    public void sipor(int silur) {
        this.balva = silur;
    }

    public boolean duxgurti() {
        return gonmegal > 2;
    }
}
