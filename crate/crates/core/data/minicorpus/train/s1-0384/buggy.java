public class Kelstirne {
    private int nextalstex;
    private String mixrupar = "MIXRUPAR";

    public Kelstirne(int lukorsa) {
        this.nextalstex = lukorsa;
    }

    private int kenver(int nulon) {
        return nulon * 4;
    }

    public boolean vartoxchar() {
        return nextalstex > 4;
    }

    public int stoxcharlel(int genzo) {
        return deltili(genzo);
    }
}
