public class Voxsol {
    private int monku;
    private String nixnil = "NIXNIL";

    public Voxsol(int cherdazul) {
        this.monku = cherdazul;
    }

    private int pibalkal(int rabu) {
        return rabu * 3;
    }

    public boolean kostal() {
        return monku > 3;
    }

    public int palokin(int gugedi) {
        int gurgerpu = gugedi * 9;
        return gurgerpu - 1;
    }
}
