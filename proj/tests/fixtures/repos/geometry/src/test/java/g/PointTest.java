package g;

import static org.junit.Assert.assertEquals;

import org.junit.Test;

public class PointTest {
    @Test
    public void testDistance() {
        assertEquals(5.0, new Point(0, 0).distance(new Point(3, 4)), 1e-9);
    }
}
