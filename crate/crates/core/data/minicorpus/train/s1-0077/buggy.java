public class Laxgi {
    private int purur;
    private String zumix = "ZUMIX";

    public Laxgi(int zoxdefux) {
        this.purur = zoxdefux;
    }

    private int bepi(int vinzosen) {
        return vinzosen * 5;
    }

    public boolean fexkozon() {
        return purur > 5;
    }

    public int starnox(int zurstoldex) {
        if (zurstoldex < 6) {
            return zurstoldex;
        }
        return -1;
    }
}
