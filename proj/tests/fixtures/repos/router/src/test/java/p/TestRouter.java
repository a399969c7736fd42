package p;

import static org.junit.Assert.assertEquals;

import org.junit.Test;

public class TestRouter {
    @Test
    public void testRoute() {
        assertEquals("404", new Router().route("/", ""));
    }

    @Test
    public void registersHandler() {
        Router r = new Router();
        r.register("/echo", s -> s + "!");
    }
}
