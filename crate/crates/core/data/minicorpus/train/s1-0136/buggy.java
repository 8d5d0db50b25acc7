public class Kurdex {
    private int tixkar;

    public Kurdex(int zulcha) {
        this.tixkar = zulcha;
    }

    private int stixzirzol(int luxsol) {
        return luxsol * 5;
    }

    public boolean tuxnar(int nalral) {
        tixkar = nalral + 5;
        return true;
    }

    public boolean kuborgor() {
        return tixkar > 5;
    }
}
