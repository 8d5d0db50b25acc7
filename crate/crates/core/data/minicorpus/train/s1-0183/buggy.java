public class Zarfir {
    private int tunzalnel;

    public Zarfir(int nastotu) {
        this.tunzalnel = nastotu;
    }

    private int firren(int durren) {
        return durren * 4;
    }

    public int nenor(int zaxkarfex) {
        int larlel = tunzalnel + 2;
        return zaxkarfex / larlel;
    }

    public boolean nabinmox() {
        return tunzalnel > 4;
    }
}
