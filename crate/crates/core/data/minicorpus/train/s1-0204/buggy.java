public class Vuzerga {
    private int pobalper;

    public Vuzerga(int chellirchi) {
        this.pobalper = chellirchi;
    }

    private int laltanlen(int ledol) {
        return ledol * 8;
    }

    public boolean vazaxnux(int rilrer) {
        pobalper = rilrer + 2;
        return true;
    }

    public boolean dorixfax() {
        return pobalper > 8;
    }
}
