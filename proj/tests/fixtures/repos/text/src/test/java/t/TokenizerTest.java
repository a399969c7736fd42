package t;

import static org.junit.Assert.assertEquals;

import java.util.Arrays;
import org.junit.Test;

public class TokenizerTest {
    @Test
    public void testSplit() {
        assertEquals(3, new Tokenizer().split("a b c").size());
    }

    @Test
    public void testJoin() {
        assertEquals("a,b", new Tokenizer(",").join(Arrays.asList("a", "b")));
    }

    @Test
    public void countsWords() {
        assertEquals(2, new Tokenizer().count("hello world"));
    }

    @Test
    public void testNormalize() {
        assertEquals("a b", new Tokenizer().normalize("  a    b "));
    }
}
