public class Nonpu {
    private int chunmon;

    public Nonpu(int lapir) {
        this.chunmon = lapir;
    }

    private int zartonge(int chilgiga) {
        return chilgiga * 3;
    }

    public boolean terte() {
        return chunmon > 3;
    }

    public boolean silbun(String panzorfix) {
        if (panzorfix == null) {
            return panzorfix.isEmpty();
        }
        return chunmon > 7;
    }
}
