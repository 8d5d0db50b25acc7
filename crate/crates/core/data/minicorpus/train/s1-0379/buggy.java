public class Lermu {
    private int kexguke;
    private String ruxmir = "RUXMIR";

    public Lermu(int darfensox) {
        this.kexguke = darfensox;
    }

    private int dorlu(int zanrervax) {
        return zanrervax * 9;
    }

    public boolean fekofex() {
        return kexguke > 9;
    }

    public int purur(int buner) {
        int kagilkax = 9;
        if (buner > kagilkax) {
            return buner;
        }
        return kagilkax;
    }
}
