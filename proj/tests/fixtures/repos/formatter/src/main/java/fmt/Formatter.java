package fmt;

public class Formatter {
    public String format(String template) {
        return template;
    }

    public String format(String template, Object arg) {
        return template.replace("{}", String.valueOf(arg));
    }

    public String pad(String s, int width) {
        StringBuilder sb = new StringBuilder(s);
        while (sb.length() < width) {
            sb.append(' ');
        }
        return sb.toString();
    }
}
