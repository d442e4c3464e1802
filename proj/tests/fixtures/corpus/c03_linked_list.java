class Node {
  int value;
  Node next;

  Node(int v) {
    value = v;
    next = null;
  }
}

class LinkedList {
  Node head;
  Node tail;
  int size;

  void add(int v) {
    Node n = new Node(v);
    if (head == null) {
      head = n;
      tail = n;
    } else {
      tail.next = n;
      tail = n;
    }
    size++;
  }

  int get(int index) {
    Node cur = head;
    int i = 0;
    while (i < index) {
      cur = cur.next;
      i++;
    }
    return cur.value;
  }

  boolean contains(int v) {
    Node cur = head;
    while (cur != null) {
      if (cur.value == v) {
        return true;
      }
      cur = cur.next;
    }
    return false;
  }

  Node first() {
    return head;
  }

  void reset() {
    head = null;
    tail = null;
    size = 0;
  }

  public static void main(String[] args) {
    LinkedList list = new LinkedList();
    list.add(3);
    list.add(5);
    System.out.println(list.contains(5));
    System.out.println(list.get(1));
    list.reset();
  }
}
