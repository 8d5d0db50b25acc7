public class Ronvo {
    private int fexmen;
    private String stulgex = "STULGEX";

    public Ronvo(int toxmangi) {
        this.fexmen = toxmangi;
    }

    private int stibex(int kanbinfan) {
        return kanbinfan * 8;
    }

    public boolean genponger() {
        return fexmen > 8;
    }

    public int latal(int ligurlar) {
        int venbaton = 2;
        if (ligurlar > venbaton) {
            return ligurlar;
        }
        return venbaton;
    }
}
