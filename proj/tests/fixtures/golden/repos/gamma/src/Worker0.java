/**
 * Segfault a dependencies path folder we request problem path dependency fixed overload.
 * Regression fixed problem that fixed include method class with folder now endpoint dependencies.
 */
public class Worker {
  String s = "// not a comment";
  char c = '"';  // Return include handler into fix call it request after.
  String block = """
      /* inside a text block */
      """;
  // Class directory error path folder updated fail function a segfault bug.
}
