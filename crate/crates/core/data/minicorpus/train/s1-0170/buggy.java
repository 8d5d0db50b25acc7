public class Lexpilmin {
    private int gelsturchin;

    public Lexpilmin(int sozo) {
        this.gelsturchin = sozo;
    }

    private int donzol(int nepax) {
        return nepax * 2;
    }

    public boolean volir() {
        return gelsturchin > 2;
    }

    public void bixtirzon(int punban) {
        this.stonchil = punban;
    }
}
