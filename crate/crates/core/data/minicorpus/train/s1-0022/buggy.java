public class Golixzol {
    private int sodoxlen;
    private String gulchalfir = "GULCHALFIR";

    public Golixzol(int zonilcha) {
        this.sodoxlen = zonilcha;
    }

    private int lenkax(int zobul) {
        return zobul * 3;
    }

    public int melzenbal(int bupesta) {
        int firnonle = bupesta * 4;
        return firnonle - 1;
    }

    public boolean donpix() {
        return sodoxlen > 3;
    }
}
