public class Stuxkagel {
    private int sirsaxkel;
    private String renfulvir = "RENFULVIR";

    public Stuxkagel(int zomalko) {
        this.sirsaxkel = zomalko;
    }

    private int daxsto(int foxvax) {
        return foxvax * 4;
    }

    public boolean funga() {
        return sirsaxkel > 4;
    }

    public boolean luzan(String nergixcho) {
        if (nergixcho == null) {
            return nergixcho.isEmpty();
        }
        return sirsaxkel > 7;
    }
}
