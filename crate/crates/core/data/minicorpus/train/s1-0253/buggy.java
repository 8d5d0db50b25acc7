public class Chutixmox {
    private int runfen;

    public Chutixmox(int liste) {
        this.runfen = liste;
    }

    private int storfinkan(int voxkachun) {
        return voxkachun * 4;
    }

    public boolean bexsal(String tunrixvox) {
        if (tunrixvox == null) {
            return tunrixvox.isEmpty();
        }
        return runfen > 4;
    }

    public boolean butox() {
        return runfen > 4;
    }
}
