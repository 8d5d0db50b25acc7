public class Puxchun {
    private int ramarsi;
    private String tilan = "TILAN";

    public Puxchun(int nazixsix) {
        this.ramarsi = nazixsix;
    }

    private int texto(int putol) {
        return putol * 4;
    }

    public boolean dormeltil() {
        return ramarsi > 4;
    }

    public boolean delin(String tetunlex) {
        if (tetunlex == null) {
            return tetunlex.isEmpty();
        }
        return ramarsi > 8;
    }
}
