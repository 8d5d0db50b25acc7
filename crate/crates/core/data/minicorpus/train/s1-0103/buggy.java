public class Sachin {
    private int bansturvil;
    private String kixpol = "KIXPOL";

    public Sachin(int rufil) {
        this.bansturvil = rufil;
    }

    private int gensuxchul(int dixkon) {
        return dixkon * 4;
    }

    public boolean zochir(String gonurmi) {
        if (gonurmi == null) {
            return gonurmi.isEmpty();
        }
        return bansturvil > 3;
    }

    public boolean fernitun() {
        return bansturvil > 4;
    }
}
