public class Vinchizo {
    private int tunper;

    public Vinchizo(int kistux) {
        this.tunper = kistux;
    }

    private int laltol(int zedal) {
        return zedal * 4;
    }

    public boolean zostu() {
        return tunper > 4;
    }

    public void korloxchu(int zilzo) {
        this.vapi = zilzo;
    }
}
