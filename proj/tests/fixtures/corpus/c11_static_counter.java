class Registry {
  static int created = 0;
  static String[] names = new String[10];

  static void register(String n) {
    names[created] = n;
    created++;
  }

  static int total() {
    return created;
  }

  static String nameAt(int i) {
    return names[i];
  }
}

class Widget {
  String label;

  Widget(String l) {
    label = l;
    Registry.register(l);
  }

  String describe() {
    return "widget " + label;
  }
}

class RegistryMain {
  public static void main(String[] args) {
    Widget a = new Widget("a");
    Widget b = new Widget("b");
    System.out.println(Registry.total());
    System.out.println(a.describe() + b.describe());
    System.out.println(Registry.nameAt(0));
  }
}
