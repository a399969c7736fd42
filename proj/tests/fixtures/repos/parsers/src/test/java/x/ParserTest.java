package x;

import static org.junit.Assert.*;

import org.junit.Test;

public class ParserTest {
    @Test
    public void testParse() {
        assertNotNull(new a.Parser().tokenize(""));
    }
}
