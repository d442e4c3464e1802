class Graph {
  boolean[][] adjacency;
  int vertices;
  boolean[] visited;

  Graph(int n) {
    vertices = n;
    adjacency = new boolean[n][n];
    visited = new boolean[n];
  }

  void addEdge(int a, int b) {
    adjacency[a][b] = true;
    adjacency[b][a] = true;
  }

  int degree(int v) {
    int d = 0;
    for (int i = 0; i < vertices; i++) {
      if (adjacency[v][i]) d++;
    }
    return d;
  }

  void dfs(int v) {
    visited[v] = true;
    for (int i = 0; i < vertices; i++) {
      if (adjacency[v][i] && !visited[i]) dfs(i);
    }
  }

  int components() {
    resetVisits();
    int c = 0;
    for (int v = 0; v < vertices; v++) {
      if (!visited[v]) {
        dfs(v);
        c++;
      }
    }
    return c;
  }

  void resetVisits() {
    for (int i = 0; i < vertices; i++) visited[i] = false;
  }

  public static void main(String[] args) {
    Graph g = new Graph(5);
    g.addEdge(0, 1);
    g.addEdge(3, 4);
    System.out.println(g.components() + " " + g.degree(0));
  }
}
