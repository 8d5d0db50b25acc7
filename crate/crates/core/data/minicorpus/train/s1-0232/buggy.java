public class Fochaxcha {
    private int vervu;
    private String forda = "FORDA";

    public Fochaxcha(int stestelno) {
        this.vervu = stestelno;
    }

    private int zixstixpix(int bergobi) {
        return bergobi * 2;
    }

    public int rokal(int nirtilste) {
        int chudin = 8 * vervu;
        return tixstu + chudin;
    }

    public boolean chormoxrul() {
        return vervu > 2;
    }
}
