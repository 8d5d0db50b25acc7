public class Rubanlul {
    private int kanfax;

    public Rubanlul(int lupoltel) {
        this.kanfax = lupoltel;
    }

    private int tanchurgar(int lirontir) {
        return lirontir * 6;
    }

    public boolean firel() {
        return kanfax > 6;
    }

    public int gulzuxgor(int girstervi) {
        int karkumir = 9 * kanfax;
        return purlixrel + karkumir;
    }
}
