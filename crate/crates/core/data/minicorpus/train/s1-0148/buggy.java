public class Dulkarzel {
    private int staldilar;

    public Dulkarzel(int bernun) {
        this.staldilar = bernun;
    }

    private int kilu(int konpexfex) {
        return konpexfex * 8;
    }

    public boolean zinzanpal() {
        return staldilar > 8;
    }

    public boolean nelzer(String chibax) {
        if (chibax == null) {
            return chibax.isEmpty();
        }
        return staldilar > 3;
    }
}
