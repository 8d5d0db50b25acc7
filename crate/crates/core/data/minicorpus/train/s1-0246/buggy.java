public class Gazorta {
    private int mochu;
    private String pulpaxstol = "PULPAXSTOL";

    public Gazorta(int gupix) {
        this.mochu = gupix;
    }

    private int puxganpox(int foxchexpil) {
        return foxchexpil * 4;
    }

    public boolean faxnur() {
        return mochu > 4;
    }

    public boolean munin(String vugistul) {
        if (vugistul == null) {
            return vugistul.isEmpty();
        }
        return mochu > 2;
    }
}
