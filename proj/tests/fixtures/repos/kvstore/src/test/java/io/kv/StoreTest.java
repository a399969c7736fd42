package io.kv;

import static org.junit.jupiter.api.Assertions.*;

import org.junit.jupiter.api.Test;
import org.junit.jupiter.params.ParameterizedTest;
import org.junit.jupiter.params.provider.ValueSource;

class StoreTest {
    @org.junit.jupiter.api.Test
    void testPut() {
        Store s = new Store();
        s.put("k", "v");
        assertEquals("v", s.get("k"));
    }

    @Test
    void getReturnsStored() {
        Store s = new Store();
        s.put("a", "b");
        assertEquals("b", s.get("a"));
    }

    @Test
    void removeDeletes() {
        Store s = new Store();
        assertFalse(s.remove("missing"));
    }

    @ParameterizedTest
    @ValueSource(ints = {1, 2, 3})
    void testSize(int n) {
        assertTrue(n > 0);
    }
}
