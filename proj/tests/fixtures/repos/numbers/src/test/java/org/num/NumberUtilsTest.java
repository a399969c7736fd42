package org.num;

import static org.junit.Assert.*;

import org.junit.Test;

public class NumberUtilsTest {
    @Test(timeout = 4000)
    public void test00() throws Throwable {
        Float float0 = NumberUtils.createFloat((String) null);
        assertNull(float0);
    }

    @Test(timeout = 4000)
    public void test01() throws Throwable {
        boolean boolean0 = NumberUtils.isDigits("123");
        assertTrue(boolean0);
    }

    @Test(timeout = 4000)
    public void test02() throws Throwable {
        assertNotNull(NumberUtils.createFloat("1.5"));
        assertFalse(NumberUtils.isDigits("1.5"));
    }

    @Test
    public void testIsDigits() {
        assertFalse(NumberUtils.isDigits(""));
    }

    @Test
    public void testIsNumber() {
        assertTrue(NumberUtils.isNumber("1e3"));
    }
}
