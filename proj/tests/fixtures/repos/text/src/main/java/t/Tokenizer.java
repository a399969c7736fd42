package t;

import java.util.Arrays;
import java.util.List;

public class Tokenizer {
    public static final String DEFAULT_DELIMITER = " ";
    private final String delimiter;

    public Tokenizer() {
        this(DEFAULT_DELIMITER);
    }

    public Tokenizer(String delimiter) {
        this.delimiter = delimiter;
    }

    public List<String> split(String text) {
        return Arrays.asList(text.split(java.util.regex.Pattern.quote(delimiter)));
    }

    public String join(List<String> parts) {
        return String.join(delimiter, parts);
    }

    public int count(String text) {
        return text.isEmpty() ? 0 : split(text).size();
    }

    public String normalize(String text) {
        return text.trim().replaceAll("\\s+", delimiter);
    }
}
