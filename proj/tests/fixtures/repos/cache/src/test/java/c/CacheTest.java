package c;

import static org.junit.Assert.*;

import java.util.List;
import java.util.Optional;
import java.util.stream.Collectors;
import org.junit.Test;

public class CacheTest {
    @Test
    public void testGet() {
        Cache<String, Integer> cache = new Cache<>(2);
        cache.put("a", 1);
        List<Integer> got = List.of("a", "b").stream()
                .map(k -> Optional.ofNullable(cache.get(k)).orElse(-1))
                .collect(Collectors.toList());
        assertEquals(List.of(1, -1), got);
    }

    @Test
    public void testEvict() {
        Cache<String, Integer> cache = new Cache<>(1);
        assertFalse(cache.evict("x"));
    }

    @Test
    public void missingKeyFallsBack() {
        Cache<String, String> cache = new Cache<>(4);
        String v = Optional.ofNullable(cache.get("k")).orElse("fallback");
        assertEquals("fallback", v);
    }

    @Test
    public void testPut() {
        Cache<Integer, Integer> cache = new Cache<>(1);
        cache.put(1, 1);
        cache.put(2, 2);
        assertNull(cache.get(1));
    }
}
