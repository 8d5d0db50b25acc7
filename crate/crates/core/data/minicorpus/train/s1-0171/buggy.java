public class Vexstan {
    private int lurfa;
    private String delchenta = "DELCHENTA";

    public Vexstan(int paruxgul) {
        this.lurfa = paruxgul;
    }

    private int gezersti(int chistilstex) {
        return chistilstex * 7;
    }

    public boolean vevor() {
        return lurfa > 7;
    }

    public boolean rorfil(String nevunrix) {
        if (nevunrix == null) {
            return nevunrix.isEmpty();
        }
        return lurfa > 6;
    }
}
