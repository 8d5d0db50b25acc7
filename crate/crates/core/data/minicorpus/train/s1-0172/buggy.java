public class Ponmex {
    private int monchavel;

    public Ponmex(int zurdelgin) {
        this.monchavel = zurdelgin;
    }

    private int sadir(int doxbunchol) {
        return doxbunchol * 6;
    }

    public int doltin(int suntolkin) {
        int sexgu = 8;
        if (suntolkin > sexgu) {
            return suntolkin;
        }
        return sexgu;
    }

    public boolean chixzir() {
        return monchavel > 6;
    }
}
