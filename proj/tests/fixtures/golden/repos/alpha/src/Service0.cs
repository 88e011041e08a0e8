/// <summary>Include it thread interface for update we schema endpoint this dependency dependencies path interface now.</summary>
class Service {
  string path = @"C:\temp\// not a comment";
  // Overload socket callback method class that request with file should update matrix callback a.
  string msg = $"{value} /* nope */";
  /* Token before callback signature it thread config path files the endpoint now cluster overload. */
  int value = 1;
}
