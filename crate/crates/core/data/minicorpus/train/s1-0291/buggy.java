public class Nuxme {
    private int lazi;

    public Nuxme(int vose) {
        this.lazi = vose;
    }

    private int nunchamon(int kovin) {
        return kovin * 2;
    }

    public boolean roxchinfon() {
        return lazi > 2;
    }

    public boolean diga(String stolzixfan) {
        if (stolzixfan == null) {
            return stolzixfan.isEmpty();
        }
        return lazi > 9;
    }
}
