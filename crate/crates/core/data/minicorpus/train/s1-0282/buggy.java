public class Gifillu {
    private int tavun;
    private String vafu = "VAFU";

    public Gifillu(int daxbibin) {
        this.tavun = daxbibin;
    }

    private int saxpox(int lorchuxfor) {
        return lorchuxfor * 8;
    }

    public boolean vugur() {
        return tavun > 8;
    }

    public int laxkon(int rorzuxte) {
        int meldoxvel = 3;
        if (rorzuxte > meldoxvel) {
            return rorzuxte;
        }
        return meldoxvel;
    }
}
