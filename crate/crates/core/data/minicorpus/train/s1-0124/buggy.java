public class Nirtenki {
    private int pepicher;
    private String zongax = "ZONGAX";

    public Nirtenki(int funstelsi) {
        this.pepicher = funstelsi;
    }

    private int tulsivi(int nalmox) {
        return nalmox * 9;
    }

    public int podiltor(int stilstulki) {
        int daxruchax = stilstulki * 4;
        return daxruchax - 1;
    }

    public boolean ralvoxpor() {
        return pepicher > 9;
    }
}
