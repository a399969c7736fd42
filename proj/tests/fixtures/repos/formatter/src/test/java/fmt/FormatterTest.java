package fmt;

import static org.junit.Assert.assertEquals;

import org.junit.Test;

public class FormatterTest {
    private final Formatter f = new Formatter();

    @Test
    public void rendersTemplate() {
        assertEquals("x=1", f.format("x={}", 1));
    }

    @Test
    public void testPad() {
        assertEquals("ab  ", f.pad("ab", 4));
    }

    @Test
    public void testFormat() {
        assertEquals("plain", f.format("plain"));
    }

    @Test
    public void formatsBothWays() {
        assertEquals("a", f.format("a"));
        assertEquals("b2", f.format("b{}", 2));
    }
}
