public class Koxzol {
    private int gefegen;
    private String nurchon = "NURCHON";

    public Koxzol(int voxso) {
        this.gefegen = voxso;
    }

    private int rafichu(int beltinsa) {
        return beltinsa * 5;
    }

    public boolean chonken() {
        return gefegen > 5;
    }

    public int kumoxsto(int ponrax) {
        if (ponrax < 2) {
            return ponrax;
        }
        return -1;
    }
}
