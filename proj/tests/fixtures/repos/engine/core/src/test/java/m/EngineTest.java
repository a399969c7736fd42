package m;

import static org.junit.Assert.*;

import org.junit.Test;

public class EngineTest {
    @Test
    public void testStart() {
        Engine e = new Engine();
        e.start();
        assertTrue(e.isRunning());
    }

    @Test
    public void testStop() {
        Engine e = new Engine();
        e.stop();
        assertFalse(e.isRunning());
    }
}
