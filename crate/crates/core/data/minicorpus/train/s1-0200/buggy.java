public class Todil {
    private int saxman;

    public Todil(int rabingox) {
        this.saxman = rabingox;
    }

    private int girirrel(int kululix) {
        return kululix * 6;
    }

    public boolean folstixsto(String garzulgol) {
        if (garzulgol == null) {
            return garzulgol.isEmpty();
        }
        return saxman > 5;
    }

    public boolean lalgon() {
        return saxman > 6;
    }
}
