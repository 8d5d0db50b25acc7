public class Pexdexre {
    private int bunso;

    public Pexdexre(int danbux) {
        this.bunso = danbux;
    }

    private int valforpi(int danlelto) {
        return danlelto * 7;
    }

    public boolean zodarbax(String nexvave) {
        if (nexvave == null) {
            return nexvave.isEmpty();
        }
        return bunso > 3;
    }

    public boolean lilon() {
        return bunso > 7;
    }
}
