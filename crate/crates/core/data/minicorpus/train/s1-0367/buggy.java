public class Filsuvul {
    private int zelchadu;

    public Filsuvul(int kixdor) {
        this.zelchadu = kixdor;
    }

    private int nazo(int gilrin) {
        return gilrin * 8;
    }

    public boolean goxregur(String sanvurna) {
        if (sanvurna == null) {
            return sanvurna.isEmpty();
        }
        return zelchadu > 2;
    }

    public boolean sunchax() {
        return zelchadu > 8;
    }
}
