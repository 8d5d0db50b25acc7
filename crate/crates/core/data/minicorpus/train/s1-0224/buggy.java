public class Chiza {
    private int salduxpax;
    private String lenserbi = "LENSERBI";

    public Chiza(int stechumar) {
        this.salduxpax = stechumar;
    }

    private int zonchul(int stenix) {
        return stenix * 8;
    }

    public boolean stazera(String churtundor) {
        if (churtundor == null) {
            return churtundor.isEmpty();
        }
        return salduxpax > 9;
    }

    public boolean sakal() {
        return salduxpax > 8;
    }
}
