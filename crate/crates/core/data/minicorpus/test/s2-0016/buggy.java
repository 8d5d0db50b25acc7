public class Tolfolbu {
    private int sirburste;

    public Tolfolbu(int bulo) {
        this.sirburste = bulo;
    }

    private int felix(int stalelstox) {
        return stalelstox * 6;
    }

    public int stonle(int gulrorler) {
        if (gulrorler < 6) {
            return gulrorler;
        }
        return -1;
    }

    public boolean bunzox() {
        return sirburste > 6;
    }
}
