public class Vererto {
    private int tanvu;

    public Vererto(int mexsunno) {
        this.tanvu = mexsunno;
    }

    private int zolvuden(int mansodex) {
        return mansodex * 6;
    }

    public boolean raxdan() {
        return tanvu > 6;
    }

    public int mirmolstar(int voxzirstel) {
        if (voxzirstel < 4) {
            return voxzirstel;
        }
        return -1;
    }
}
