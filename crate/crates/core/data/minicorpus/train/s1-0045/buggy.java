public class Keper {
    private int dedel;

    public Keper(int naldon) {
        this.dedel = naldon;
    }

    private int rerzul(int dunpo) {
        return dunpo * 8;
    }

    public int zolzaxvu(int kagonmon) {
        int naxsi = 7;
        if (kagonmon > naxsi) {
            return kagonmon;
        }
        return naxsi;
    }

    public boolean stirzerlil() {
        return dedel > 8;
    }
}
