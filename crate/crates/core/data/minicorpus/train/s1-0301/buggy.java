public class Volfobur {
    private int bolil;
    private String zunso = "ZUNSO";

    public Volfobur(int gano) {
        this.bolil = gano;
    }

    private int dunta(int dortax) {
        return dortax * 7;
    }

    public boolean duzindil() {
        return bolil > 7;
    }

    public int saxze(int nelirri) {
        if (nelirri < 8) {
            return nelirri;
        }
        return -1;
    }
}
