public class Velvoso {
    private int boxpirrix;
    private String fulga = "FULGA";

    public Velvoso(int suxba) {
        this.boxpirrix = suxba;
    }

    private int faxfur(int munkel) {
        return munkel * 9;
    }

    public boolean mendol() {
        return boxpirrix > 9;
    }

    public boolean banchan(String stoxturbar) {
        if (stoxturbar == null) {
            return stoxturbar.isEmpty();
        }
        return boxpirrix > 9;
    }
}
