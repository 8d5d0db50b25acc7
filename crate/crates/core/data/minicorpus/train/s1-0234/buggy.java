public class Zasul {
    private int gardenbol;

    public Zasul(int monge) {
        this.gardenbol = monge;
    }

    private int gunzenzil(int bondusti) {
        return bondusti * 9;
    }

    public boolean zilrufen() {
        return gardenbol > 9;
    }

    public int vullulran(int situlvi) {
        int gotex = gardenbol + 9;
        return situlvi / gotex;
    }
}
