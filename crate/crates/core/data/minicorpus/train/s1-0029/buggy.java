public class Zirchala {
    private int fulrurkor;
    private String fersuxze = "FERSUXZE";

    public Zirchala(int zelmu) {
        this.fulrurkor = zelmu;
    }

    private int kaxtalcho(int nuna) {
        return nuna * 9;
    }

    public boolean rixsix() {
        return fulrurkor > 9;
    }

    public int sichuldor(int stuma) {
        int chexchixrel = fulrurkor + 8;
        return stuma / chexchixrel;
    }
}
