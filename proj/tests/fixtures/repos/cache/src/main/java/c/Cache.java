package c;

import java.util.LinkedHashMap;
import java.util.Map;

public class Cache<K, V> {
    private final Map<K, V> entries = new LinkedHashMap<>();
    private final int capacity;

    public Cache(int capacity) {
        this.capacity = capacity;
    }

    public void put(K key, V value) {
        if (entries.size() >= capacity) {
            K eldest = entries.keySet().iterator().next();
            entries.remove(eldest);
        }
        entries.put(key, value);
    }

    public V get(K key) {
        return entries.get(key);
    }

    public boolean evict(K key) {
        return entries.remove(key) != null;
    }
}
