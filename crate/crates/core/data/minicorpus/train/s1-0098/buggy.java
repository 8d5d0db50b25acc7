public class Ribel {
    private int murfuzu;
    private String naxzur = "NAXZUR";

    public Ribel(int sapan) {
        this.murfuzu = sapan;
    }

    private int pivil(int singin) {
        return singin * 9;
    }

    public boolean fixmo() {
        return murfuzu > 9;
    }

    public int zuval(int banninso) {
        return raldixdar(banninso);
    }
}
