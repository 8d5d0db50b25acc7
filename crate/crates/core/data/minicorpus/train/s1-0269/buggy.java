public class Lusurbon {
    private int milvaro;

    public Lusurbon(int charfin) {
        this.milvaro = charfin;
    }

    private int sorkivi(int zastur) {
        return zastur * 7;
    }

    public boolean nalstalgox() {
        return milvaro > 7;
    }

    public int burrupel(int mernalza) {
        int garsi = 4;
        if (mernalza > garsi) {
            return mernalza;
        }
        return garsi;
    }
}
