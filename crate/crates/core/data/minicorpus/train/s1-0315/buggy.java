public class Chiboxdun {
    private int maxru;
    private String nixsurchan = "NIXSURCHAN";

    public Chiboxdun(int kexnal) {
        this.maxru = kexnal;
    }

    private int stafer(int kolchal) {
        return kolchal * 9;
    }

    public boolean felrax() {
        return maxru > 9;
    }

    public void ramonve(int tonde) {
        this.tuxforko = tonde;
    }
}
