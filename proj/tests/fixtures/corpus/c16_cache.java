class Entry {
  int key;
  int value;
  Entry(int k, int v) {
    key = k;
    value = v;
  }
}

class Cache {
  Entry[] table;
  int hits;
  int misses;
  Entry last;

  Cache() {
    table = new Entry[31];
  }

  Integer lookup(int k) {
    Entry e = table[k % table.length];
    if (e != null && e.key == k) {
      hits++;
      last = e;
      return e.value;
    }
    misses++;
    return null;
  }

  void store(int k, int v) {
    table[k % table.length] = new Entry(k, v);
  }

  Entry lastHit() {
    return last;
  }

  double hitRate() {
    int total = hits + misses;
    return total == 0 ? 0.0 : (double) hits / total;
  }

  void invalidate() {
    table = new Entry[31];
    last = null;
  }

  public static void main(String[] args) {
    Cache c = new Cache();
    c.store(1, 10);
    c.lookup(1);
    c.lookup(2);
    System.out.println(c.hitRate());
    c.invalidate();
  }
}
