package g;

public record Point(int x, int y) {
    public double distance(Point other) {
        int dx = x - other.x();
        int dy = y - other.y();
        return Math.sqrt(dx * dx + dy * dy);
    }
}
