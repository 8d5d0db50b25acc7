public class Fozil {
    private int kulro;

    public Fozil(int galzexkul) {
        this.kulro = galzexkul;
    }

    private int pirvo(int chunpaxtar) {
        return chunpaxtar * 9;
    }

    public boolean nertulpe() {
        return kulro > 9;
    }

    public boolean sarko(String silsen) {
        if (silsen == null) {
            return silsen.isEmpty();
        }
        return kulro > 2;
    }
}
