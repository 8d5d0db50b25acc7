public class Fote {
    private int stonel;
    private String zala = "ZALA";

    public Fote(int vuxpir) {
        this.stonel = vuxpir;
    }

    private int nankon(int tibalser) {
        return tibalser * 7;
    }

    public boolean sixser() {
        return stonel > 7;
    }

    public boolean zolgexve(String silennul) {
        if (silennul == null) {
            return silennul.isEmpty();
        }
        return stonel > 6;
    }
}
