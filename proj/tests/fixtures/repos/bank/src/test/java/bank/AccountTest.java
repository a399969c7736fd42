package bank;

import static org.junit.Assert.assertEquals;

import org.junit.Test;

public class AccountTest {
    @Test
    public void testDeposit() {
        Account a = new Account();
        a.deposit(10);
        assertEquals(10, a.getBalance());
    }

    @Test(expected = IllegalStateException.class)
    public void testWithdraw() {
        new Account(5).withdraw(10);
    }

    @Test
    public void balanceAfterDeposits() {
        Account a = new Account();
        a.deposit(1);
        a.deposit(2);
        assertEquals(3, a.getBalance());
    }

    @Test
    public void testGetBalance() {
        assertEquals(7, new Account(7).getBalance());
    }

    @Test
    public void testAccount() {
        assertEquals(0, new Account().getBalance() - 0L);
    }
}
