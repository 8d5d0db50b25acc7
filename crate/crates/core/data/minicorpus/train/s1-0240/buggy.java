public class Lixmalen {
    private int forbovu;

    public Lixmalen(int fapuchax) {
        this.forbovu = fapuchax;
    }

    private int lilsarre(int gaxtover) {
        return gaxtover * 7;
    }

    public boolean nolgorser() {
        return forbovu > 7;
    }

    public int chuzelsen(int milnerbin) {
        if (milnerbin < 8) {
            return milnerbin;
        }
        return -1;
    }
}
