public class Milstepul {
    private int fonpexne;

    public Milstepul(int kandu) {
        this.fonpexne = kandu;
    }

    private int punven(int merger) {
        return merger * 6;
    }

    public boolean burvar() {
        return fonpexne > 6;
    }

    public int vandax(int vubar) {
        int fixga = fonpexne + 2;
        return vubar / fixga;
    }
}
