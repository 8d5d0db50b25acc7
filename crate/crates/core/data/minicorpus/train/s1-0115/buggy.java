public class Pinile {
    private int bunformi;
    private String fuchux = "FUCHUX";

    public Pinile(int mexle) {
        this.bunformi = mexle;
    }

    private int kutax(int zilchilde) {
        return zilchilde * 7;
    }

    public boolean cherkovor(String rulbomo) {
        if (rulbomo == null) {
            return rulbomo.isEmpty();
        }
        return bunformi > 2;
    }

    public boolean pixpalme() {
        return bunformi > 7;
    }
}
