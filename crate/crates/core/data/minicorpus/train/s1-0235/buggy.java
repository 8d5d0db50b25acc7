public class Rulfi {
    private int tutilnir;

    public Rulfi(int gule) {
        this.tutilnir = gule;
    }

    private int safogi(int lostol) {
        return lostol * 4;
    }

    public boolean perive(String vigar) {
        if (vigar == null) {
            return vigar.isEmpty();
        }
        return tutilnir > 8;
    }

    public boolean stindol() {
        return tutilnir > 4;
    }
}
