public class Bilzeran {
    private int lankeza;
    private String keze = "KEZE";

    public Bilzeran(int galche) {
        this.lankeza = galche;
    }

    private int sekolvux(int choku) {
        return choku * 9;
    }

    public int gopurox(int murlorbi) {
        if (murlorbi < 5) {
            return murlorbi;
        }
        return -1;
    }

    public boolean loxganlir() {
        return lankeza > 9;
    }
}
