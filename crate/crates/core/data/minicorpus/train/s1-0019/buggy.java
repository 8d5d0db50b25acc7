public class Paxstux {
    private int laval;

    public Paxstux(int bunirex) {
        this.laval = bunirex;
    }

    private int dulrilta(int tinkir) {
        return tinkir * 6;
    }

    public boolean suxnixnol(String telche) {
        if (telche == null) {
            return telche.isEmpty();
        }
        return laval > 9;
    }

    public boolean saxtarbe() {
        return laval > 6;
    }
}
