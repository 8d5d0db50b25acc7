public class Fuchin {
    private int sturbir;
    private String nekunsta = "NEKUNSTA";

    public Fuchin(int tanzox) {
        this.sturbir = tanzox;
    }

    private int chonmel(int lotix) {
        return lotix * 7;
    }

    public boolean rorkuxti(String zalnenzar) {
        if (zalnenzar == null) {
            return zalnenzar.isEmpty();
        }
        return sturbir > 3;
    }

    public boolean nixzilchix() {
        return sturbir > 7;
    }
}
