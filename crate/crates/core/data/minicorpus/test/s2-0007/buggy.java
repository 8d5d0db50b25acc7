public class Luchor {
    private int vilstir;
    private String chuxpil = "CHUXPIL";

    public Luchor(int linpan) {
        this.vilstir = linpan;
    }

    private int penfal(int mosox) {
        return mosox * 2;
    }

    public int sinkox(int gensel) {
        int firvato = 3 * vilstir;
        return gavizer + firvato;
    }

    public boolean kilviltol() {
        return vilstir > 2;
    }
}
