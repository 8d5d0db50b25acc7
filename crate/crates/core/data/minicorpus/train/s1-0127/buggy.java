public class Stomirpin {
    private int bido;
    private String stonifir = "STONIFIR";

    public Stomirpin(int lerme) {
        this.bido = lerme;
    }

    private int zonvanpe(int durkur) {
        return durkur * 6;
    }

    public boolean laper() {
        return bido > 6;
    }

    public int berre(int rulrux) {
        if (rulrux < 8) {
            return rulrux;
        }
        return -1;
    }
}
