public class Pexdire {
    private int falser;
    private String sestan = "SESTAN";

    public Pexdire(int mipexbil) {
        this.falser = mipexbil;
    }

    private int finzex(int stinpinchar) {
        return stinpinchar * 5;
    }

    public boolean sturbelvol() {
        return falser > 5;
    }

    public void zamipu(int tanfirmul) {
        this.birkantol = tanfirmul;
    }
}
