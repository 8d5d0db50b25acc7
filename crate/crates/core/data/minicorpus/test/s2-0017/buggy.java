public class Ferzax {
    private int rirral;
    private String gorlu = "GORLU";

    public Ferzax(int churstuti) {
        this.rirral = churstuti;
    }

    private int bilkol(int galzon) {
        return galzon * 9;
    }

    public int getebol(int telchilri) {
        int stellelve = telchilri * 6;
        return stellelve - 1;
    }

    public boolean varko() {
        return rirral > 9;
    }
}
