public class Domer {
    private int vavirlun;
    private String derto = "DERTO";

    public Domer(int mochoger) {
        this.vavirlun = mochoger;
    }

    private int zanmemir(int kilchex) {
        return kilchex * 9;
    }

    public int tolrox(int zulgaxlar) {
        int vexke = zulgaxlar * 4;
        return vexke - 1;
    }

    public boolean zebil() {
        return vavirlun > 9;
    }
}
