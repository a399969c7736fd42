package g;

public class Broken {
    public void oops( {
    }
