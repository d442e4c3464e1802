class ArrayCollection{
 public Integer[] array1;
 ArrayCollection(){
 array1 = new Integer[10];
 for(int i = 0; i < array1.length; i++)
  array1[i] = (int)(Math.random() * 10);
 }
 public void createColl(Integer[] coll) {
 coll = new Integer[10];
 for(int i = 0; i < coll.length-1; i++)
  coll[i] = (int)(Math.random() * 10);
 }
 public void printColl(Integer[] coll) {
  for(int i = 0; i < coll.length; i++){
   System.out.println(" "+coll[i]);}
 }
 public  void incrColl(Integer [] coll) {
  for (int i = 0; i < this.array1.length; i++){
    this.array1[i] = this.array1[i] + i; }
  for (int j = 0; j < coll.length; j++){
    coll[j] = coll[j] + j; }
 }
 public boolean isSorted(Integer[] coll) {
 boolean flag = false;
 int j = 0;
 for(int i = 0;i<coll.length && j<coll.length;i++){
  if(coll[i] > coll[j])
   flag = true;
  else
   flag = false;
  }
  return flag;
 }
 public Integer findMax(Integer[] coll) {
  int max;
  max = coll[0];
  for (int i = 1; i < coll.length; i++){
   if(coll[i] > max)
     max = coll[i];}
  return max;
 }
 public void computeStat(Integer[] coll){
  printColl(coll);
  System.out.println("Is sorted = "+isSorted(coll));
  System.out.println("Max number = "+findMax(coll));
 }
 public void tidyupColls(Integer[] coll){
    this.array1 = null;
    coll = null;}
}
class ObjectClass{
 public Integer[] array2;
 public  Client x,y,z,w;
 ObjectClass(){
  array2 = new Integer[10];
  for(int i = 0; i < array2.length; i++){
   array2[i] = (int)(Math.random() * 10);
  }
  x = new Client(); y = new Client(); z = new Client(); w = new Client();
 }
 public void manipulateObjects(Client p1, Client p2){
   x = p1;
   Client t = x;
   y = t;
   x.data = 10;
   System.out.println("z.data = "+p2.data);}
}
class Client{
 Integer data = 100;
 public static void main(String[] a) {
  ArrayCollection obj1 = new ArrayCollection();
  ObjectClass obj2 = new ObjectClass();
  obj1.incrColl(obj2.array2);
  obj1.computeStat(obj1.array1);
  obj1.computeStat(obj2.array2);
  obj1.tidyupColls(obj2.array2);
  obj2.manipulateObjects(obj2.w, obj2.z);
 }
}
