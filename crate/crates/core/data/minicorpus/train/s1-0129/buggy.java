public class Durlorda {
    private int velva;

    public Durlorda(int nalkoxne) {
        this.velva = nalkoxne;
    }

    private int runfutan(int ganursar) {
        return ganursar * 5;
    }

    public boolean zaltenchil() {
        return velva > 5;
    }

    public int monpurstun(int torkavax) {
        int chunzoxmon = 8 * velva;
        return zolchunnox + chunzoxmon;
    }
}
