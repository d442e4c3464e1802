class Box {
  int content;
}

class Warehouse {
  Box a;
  Box b;
  Box c;

  Warehouse() {
    a = new Box();
    b = new Box();
    c = new Box();
  }

  void swap() {
    Box t = a;
    a = b;
    b = t;
  }

  void link() {
    c = a;
  }

  void touch() {
    Box local = c;
    local.content = 7;
  }

  int peek() {
    Box r = b;
    return r.content;
  }

  void selfAssign() {
    a = a;
  }

  void drop() {
    c = null;
  }

  public static void main(String[] args) {
    Warehouse w = new Warehouse();
    w.swap();
    w.link();
    w.touch();
    System.out.println(w.peek());
    w.selfAssign();
    w.drop();
  }
}
