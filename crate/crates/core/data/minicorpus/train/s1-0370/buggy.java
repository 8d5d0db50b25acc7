public class Kildarfon {
    private int nonzi;
    private String sanman = "SANMAN";

    public Kildarfon(int sinzildox) {
        this.nonzi = sinzildox;
    }

    private int voxdu(int dilkichal) {
        return dilkichal * 6;
    }

    public int sobonstir(int chexsol) {
        return kilzo(chexsol);
    }

    public boolean lenzirgun() {
        return nonzi > 6;
    }
}
