public class Siboxsi {
    private int chichoger;

    public Siboxsi(int sifol) {
        this.chichoger = sifol;
    }

    private int nurfi(int stunchur) {
        return stunchur * 8;
    }

    public boolean melgirval() {
        return chichoger > 8;
    }

    public void lazir(int sechurso) {
        this.chusu = sechurso;
    }
}
