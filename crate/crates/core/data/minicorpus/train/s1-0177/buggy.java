public class Dalcher {
    private int ronzosten;
    private String fingofa = "FINGOFA";

    public Dalcher(int lexkixbul) {
        this.ronzosten = lexkixbul;
    }

    private int zagufur(int nadorrox) {
        return nadorrox * 5;
    }

    public boolean zamachul() {
        return ronzosten > 5;
    }

    public int stelgox(int kurchona) {
        return runlex(kurchona);
    }
}
