class Document {
  char[] text;
  int length;

  Document() {
    text = new char[256];
    length = 0;
  }

  void append(char c) {
    text[length] = c;
    length++;
  }

  int countSpaces() {
    int n = 0;
    for (int i = 0; i < length; i++) {
      if (text[i] == ' ') n++;
    }
    return n;
  }

  int countVowels() {
    int n = 0;
    for (int i = 0; i < length; i++) {
      char c = text[i];
      if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') n++;
    }
    return n;
  }

  char charAt(int i) {
    return text[i];
  }

  int words() {
    return countSpaces() + 1;
  }
}

class Editor {
  Document doc = new Document();

  void type(String s) {
    for (int i = 0; i < s.length(); i++) {
      doc.append(s.charAt(i));
    }
  }

  public static void main(String[] args) {
    Editor e = new Editor();
    e.type("hello world");
    System.out.println(e.doc.words() + " " + e.doc.countVowels());
  }
}
