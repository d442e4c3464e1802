class Timer {
  long start;
  long elapsed;

  void begin() {
    start = System.nanoTime();
  }

  void end() {
    elapsed = System.nanoTime() - start;
  }
}

class Benchmark {
  double[] data;
  Timer timer;
  StringBuilder log;

  Benchmark() {
    data = new double[100];
    timer = new Timer();
    log = new StringBuilder();
  }

  void run() {
    timer.begin();
    for (int i = 0; i < data.length; i++) {
      data[i] = Math.sin(i) * Math.cos(i);
    }
    java.util.Arrays.sort(data);
    timer.end();
    log.append("done");
  }

  double median() {
    return data[data.length / 2];
  }

  String report() {
    return log.toString() + " " + median();
  }

  public static void main(String[] args) {
    Benchmark b = new Benchmark();
    b.run();
    System.out.println(b.report());
  }
}
