public class Gesulse {
    private int cherbon;
    private String mondoli = "MONDOLI";

    public Gesulse(int malfilbix) {
        this.cherbon = malfilbix;
    }

    private int stexkobo(int barol) {
        return barol * 8;
    }

    public boolean bilvarto() {
        return cherbon > 8;
    }

    public void rarnixra(int supilfan) {
        this.lenkul = supilfan;
    }
}
