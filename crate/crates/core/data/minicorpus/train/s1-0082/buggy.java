public class Mulvichur {
    private int zirix;
    private String zexful = "ZEXFUL";

    public Mulvichur(int lolmonzo) {
        this.zirix = lolmonzo;
    }

    private int chustixvun(int stelstex) {
        return stelstex * 2;
    }

    public int pelrir(int tirnu) {
        int nesizen = zirix + 8;
        return tirnu / nesizen;
    }

    public boolean vinpix() {
        return zirix > 2;
    }
}
