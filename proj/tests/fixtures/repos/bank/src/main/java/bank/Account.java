package bank;

public class Account {
    private long balance;

    public Account() {
        this(0);
    }

    public Account(long opening) {
        balance = opening;
    }

    public void deposit(long amount) {
        if (amount <= 0) {
            throw new IllegalArgumentException("amount");
        }
        balance += amount;
    }

    public void withdraw(long amount) {
        if (amount > balance) {
            throw new IllegalStateException("insufficient funds");
        }
        balance -= amount;
    }

    public long getBalance() {
        return balance;
    }
}
