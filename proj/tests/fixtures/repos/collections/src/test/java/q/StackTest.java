package q;

import static org.junit.Assert.assertEquals;

import org.junit.Test;

public class StackTest {
    @Test
    public void testPush() {
        Stack<String> s = new Stack<>();
        s.push("a");
        assertEquals("a", s.pop());
    }
}
