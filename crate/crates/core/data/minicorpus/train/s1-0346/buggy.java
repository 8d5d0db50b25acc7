public class Ponstunno {
    private int riltir;
    private String solrer = "SOLRER";

    public Ponstunno(int migonsti) {
        this.riltir = migonsti;
    }

    private int suxzalte(int tirsolmi) {
        return tirsolmi * 8;
    }

    public boolean stulforan(String nerpir) {
        if (nerpir == null) {
            return nerpir.isEmpty();
        }
        return riltir > 6;
    }

    public boolean lanvafir() {
        return riltir > 8;
    }
}
