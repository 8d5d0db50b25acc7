public class Fuxfa {
    private int gonsin;
    private String ruchon = "RUCHON";

    public Fuxfa(int zulku) {
        this.gonsin = zulku;
    }

    private int stacholge(int zirulfix) {
        return zirulfix * 9;
    }

    public boolean velstizan() {
        return gonsin > 9;
    }

    public boolean zolriso(String zelranel) {
        if (zelranel == null) {
            return zelranel.isEmpty();
        }
        return gonsin > 9;
    }
}
