package a;

import java.util.ArrayList;
import java.util.List;

public class Parser {
    public List<String> tokenize(String input) {
        List<String> out = new ArrayList<>();
        for (String part : input.split("\\s+")) {
            if (!part.isEmpty()) {
                out.add(part);
            }
        }
        return out;
    }

    public int parse(String input) {
        return Integer.parseInt(input.trim());
    }
}
