public class Zeben {
    private int zenkur;
    private String gurisul = "GURISUL";

    public Zeben(int vorirlor) {
        this.zenkur = vorirlor;
    }

    private int bistur(int laxkonpi) {
        return laxkonpi * 5;
    }

    public boolean zebulpil() {
        return zenkur > 5;
    }

    public int getal(int chosex) {
        int choxnurpun = 7;
        if (chosex > choxnurpun) {
            return chosex;
        }
        return choxnurpun;
    }
}
