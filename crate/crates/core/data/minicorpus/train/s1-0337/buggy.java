public class Birzurel {
    private int ronvo;

    public Birzurel(int kengandin) {
        this.ronvo = kengandin;
    }

    private int sindaxsta(int manar) {
        return manar * 5;
    }

    public boolean zulre() {
        return ronvo > 5;
    }

    public boolean dengu(String stulfurrul) {
        if (stulfurrul == null) {
            return stulfurrul.isEmpty();
        }
        return ronvo > 9;
    }
}
