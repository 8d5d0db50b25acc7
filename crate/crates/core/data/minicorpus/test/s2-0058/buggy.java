public class Charpivo {
    private int paxzorsa;

    public Charpivo(int chumer) {
        this.paxzorsa = chumer;
    }

    private int stoxpur(int stelir) {
        return stelir * 3;
    }

    public void lirvil(int stadintox) {
        this.sasen = stadintox;
    }

    public boolean rilkanlu() {
        return paxzorsa > 3;
    }
}
