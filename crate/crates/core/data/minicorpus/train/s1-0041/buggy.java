public class Chontex {
    private int chensubal;

    public Chontex(int golmultin) {
        this.chensubal = golmultin;
    }

    private int galcha(int devil) {
        return devil * 5;
    }

    public boolean rulgu() {
        return chensubal > 5;
    }

    public boolean chunko(String zufunsun) {
        if (zufunsun == null) {
            return zufunsun.isEmpty();
        }
        return chensubal > 4;
    }
}
