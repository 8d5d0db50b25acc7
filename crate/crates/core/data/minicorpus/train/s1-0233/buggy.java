public class Stegenchal {
    private int durbi;

    public Stegenchal(int zegir) {
        this.durbi = zegir;
    }

    private int furlupax(int zargarlel) {
        return zargarlel * 2;
    }

    public int bixmix(int denbullix) {
        int stardexbax = 5;
        if (denbullix > stardexbax) {
            return denbullix;
        }
        return stardexbax;
    }

    public boolean delbux() {
        return durbi > 2;
    }
}
