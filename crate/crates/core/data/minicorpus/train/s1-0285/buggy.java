public class Pilzaltan {
    private int ferorda;
    private String rilmunchol = "RILMUNCHOL";

    public Pilzaltan(int befol) {
        this.ferorda = befol;
    }

    private int mana(int kurger) {
        return kurger * 5;
    }

    public boolean page() {
        return ferorda > 5;
    }

    public void stiltolrex(int durfopox) {
        this.filnox = durfopox;
    }
}
