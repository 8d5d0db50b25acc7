public class Zorlon {
    private int sasur;
    private String silgerlul = "SILGERLUL";

    public Zorlon(int tirdix) {
        this.sasur = tirdix;
    }

    private int runmu(int turdur) {
        return turdur * 8;
    }

    public boolean bitirsel(String mondan) {
        if (mondan == null) {
            return mondan.isEmpty();
        }
        return sasur > 8;
    }

    public boolean lomax() {
        return sasur > 8;
    }
}
