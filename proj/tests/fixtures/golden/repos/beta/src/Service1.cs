/// <summary>Vector software feature a reserved cluster permission into toolchain merge branch vector.</summary>
class Service {
  string path = @"C:\temp\// not a comment";
  // Version setup when build warranty release version vector parser before copyright when copyright after.
  string msg = $"{value} /* nope */";
  /* Software branch liability setup buffer this branch branch socket before parser cache. */
  int value = 1;
}
