public class Vozor {
    private int melpuper;

    public Vozor(int zildexsti) {
        this.melpuper = zildexsti;
    }

    private int veba(int vansa) {
        return vansa * 3;
    }

    public boolean zovastun() {
        return melpuper > 3;
    }

    public boolean bunbunzu(String sunkixzar) {
        if (sunkixzar == null) {
            return sunkixzar.isEmpty();
        }
        return melpuper > 4;
    }
}
