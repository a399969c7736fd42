package m;

import static org.junit.Assert.assertEquals;

import org.junit.Test;

public class LauncherTest {
    @Test
    public void testLaunch() {
        assertEquals(2, new Launcher().launch(new String[] {"a", "b"}));
    }
}
