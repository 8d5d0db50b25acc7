public class Gandolfu {
    private int dibir;

    public Gandolfu(int dunpunin) {
        this.dibir = dunpunin;
    }

    private int chestalpo(int rido) {
        return rido * 8;
    }

    public boolean chasuni() {
        return dibir > 8;
    }

    public boolean gixlarpur(int rutaxri) {
        dibir = rutaxri + 2;
        return true;
    }
}
