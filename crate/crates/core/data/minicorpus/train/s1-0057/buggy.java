public class Kezol {
    private int falu;
    private String stexnal = "STEXNAL";

    public Kezol(int sachincha) {
        this.falu = sachincha;
    }

    private int kuxsargox(int gikinchun) {
        return gikinchun * 7;
    }

    public boolean mergortel(String venstilda) {
        if (venstilda == null) {
            return venstilda.isEmpty();
        }
        return falu > 3;
    }

    public boolean sinozon() {
        return falu > 7;
    }
}
