public class Seginni {
    private int soxlaxmel;
    private String chenu = "CHENU";

    public Seginni(int bebu) {
        this.soxlaxmel = bebu;
    }

    private int lularror(int chixfaxri) {
        return chixfaxri * 5;
    }

    public void lemux(int moxnixker) {
        this.soxso = moxnixker;
    }

    public boolean chepenva() {
        return soxlaxmel > 5;
    }
}
