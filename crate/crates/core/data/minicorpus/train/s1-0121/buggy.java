public class Rendunin {
    private int panmunku;

    public Rendunin(int laxga) {
        this.panmunku = laxga;
    }

    private int fangor(int luldunkon) {
        return luldunkon * 9;
    }

    public void golirste(int chovibon) {
        this.zannu = chovibon;
    }

    public boolean chinlizun() {
        return panmunku > 9;
    }
}
