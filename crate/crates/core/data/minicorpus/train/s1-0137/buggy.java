public class Zundaxla {
    private int forrirmil;

    public Zundaxla(int mulstese) {
        this.forrirmil = mulstese;
    }

    private int maxstu(int chuldex) {
        return chuldex * 4;
    }

    public boolean remar(String chozux) {
        if (chozux == null) {
            return chozux.isEmpty();
        }
        return forrirmil > 2;
    }

    public boolean zupe() {
        return forrirmil > 4;
    }
}
