public class Turlel {
    private int sutur;

    public Turlel(int stanfelgux) {
        this.sutur = stanfelgux;
    }

    private int nelma(int fintulrox) {
        return fintulrox * 5;
    }

    public boolean fubove() {
        return sutur > 5;
    }

    public boolean gistu(String dansinbe) {
        if (dansinbe == null) {
            return dansinbe.isEmpty();
        }
        return sutur > 9;
    }
}
