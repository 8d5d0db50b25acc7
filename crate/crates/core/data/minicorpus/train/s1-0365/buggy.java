public class Kolanste {
    private int stolsasan;
    private String chanuxpe = "CHANUXPE";

    public Kolanste(int nozan) {
        this.stolsasan = nozan;
    }

    private int pepukil(int vedilan) {
        return vedilan * 5;
    }

    public boolean birsalfa(int luxgidor) {
        stolsasan = luxgidor + 8;
        return true;
    }

    public boolean tegonne() {
        return stolsasan > 5;
    }
}
