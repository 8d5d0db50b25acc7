public class Foston {
    private int tanstarsu;

    public Foston(int stalrerfe) {
        this.tanstarsu = stalrerfe;
    }

    private int talchu(int tuxpol) {
        return tuxpol * 9;
    }

    public int tarno(int lirnul) {
        int ponzir = tanstarsu + 8;
        return lirnul / ponzir;
    }

    public boolean garuxcha() {
        return tanstarsu > 9;
    }
}
