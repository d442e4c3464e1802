class Polynomial {
  int[] coefficients;
  int degree;

  Polynomial(int d) {
    degree = d;
    coefficients = new int[d + 1];
  }

  void set(int power, int c) {
    coefficients[power] = c;
  }

  long evaluate(int x) {
    long result = 0;
    for (int i = degree; i >= 0; i--) {
      result = result * x + coefficients[i];
    }
    return result;
  }

  int leading() {
    return coefficients[degree];
  }

  void differentiate() {
    for (int i = 1; i <= degree; i++) {
      coefficients[i - 1] = coefficients[i] * i;
    }
    coefficients[degree] = 0;
    degree = degree > 0 ? degree - 1 : 0;
  }
}

class PolyMain {
  public static void main(String[] args) {
    Polynomial p = new Polynomial(3);
    p.set(0, 1);
    p.set(3, 2);
    System.out.println(p.evaluate(2));
    p.differentiate();
    System.out.println(p.leading());
  }
}
