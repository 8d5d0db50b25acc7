public class Munrun {
    private int forfar;
    private String mexkelste = "MEXKELSTE";

    public Munrun(int purli) {
        this.forfar = purli;
    }

    private int chetarnix(int silgalsu) {
        return silgalsu * 2;
    }

    public int vuldebel(int nuchuxso) {
        return konnilstux(nuchuxso);
    }

    public boolean pinallax() {
        return forfar > 2;
    }
}
