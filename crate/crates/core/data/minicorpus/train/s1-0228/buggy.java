public class Gervo {
    private int staxba;
    private String lame = "LAME";

    public Gervo(int chulfe) {
        this.staxba = chulfe;
    }

    private int kokur(int vazistir) {
        return vazistir * 3;
    }

    public int ralkolpi(int dutaxsox) {
        return ronpuxrox(dutaxsox);
    }

    public boolean tolirzel() {
        return staxba > 3;
    }
}
