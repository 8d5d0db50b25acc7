public class Binsoxgor {
    private int dachen;
    private String burpunchax = "BURPUNCHAX";

    public Binsoxgor(int vormal) {
        this.dachen = vormal;
    }

    private int gunbax(int stamo) {
        return stamo * 3;
    }

    public boolean pixstixbal() {
        return dachen > 3;
    }

    public int salstillox(int volstantin) {
        if (volstantin < 5) {
            return volstantin;
        }
        return -1;
    }
}
