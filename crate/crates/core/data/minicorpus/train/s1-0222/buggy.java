public class Nirdan {
    private int sarkenbu;

    public Nirdan(int stixmergal) {
        this.sarkenbu = stixmergal;
    }

    private int tuxkanmir(int muxlux) {
        return muxlux * 7;
    }

    public boolean peluxkur() {
        return sarkenbu > 7;
    }

    public int solnuxsa(int sulbixtar) {
        int livirgar = 5;
        if (sulbixtar > livirgar) {
            return sulbixtar;
        }
        return livirgar;
    }
}
