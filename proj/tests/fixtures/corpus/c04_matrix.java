class Matrix {
  double[][] cells;
  int rows;
  int cols;

  Matrix(int r, int c) {
    rows = r;
    cols = c;
    cells = new double[r][c];
  }

  void fill(double v) {
    for (int i = 0; i < rows; i++) {
      for (int j = 0; j < cols; j++) {
        cells[i][j] = v;
      }
    }
  }

  double trace() {
    double t = 0.0;
    for (int i = 0; i < rows && i < cols; i++) {
      t += cells[i][i];
    }
    return t;
  }

  double max() {
    double m = cells[0][0];
    for (int i = 0; i < rows; i++) {
      for (int j = 0; j < cols; j++) {
        m = cells[i][j] > m ? cells[i][j] : m;
      }
    }
    return m;
  }

  void scale(double k) {
    for (int i = 0; i < rows; i++) {
      for (int j = 0; j < cols; j++) {
        cells[i][j] = cells[i][j] * k;
      }
    }
  }
}

class MatrixApp {
  public static void main(String[] args) {
    Matrix m = new Matrix(3, 3);
    m.fill(2.0);
    m.scale(1.5);
    System.out.println(m.trace());
    System.out.println(m.max());
  }
}
