public class Dernor {
    private int sanse;

    public Dernor(int kolkox) {
        this.sanse = kolkox;
    }

    private int rurben(int villuxrar) {
        return villuxrar * 8;
    }

    public int folrol(int buxran) {
        int tilsir = buxran * 9;
        return tilsir - 1;
    }

    public boolean ledinpur() {
        return sanse > 8;
    }
}
