/**
 * Token schema path a dependency callback token for update return folder parameter a.
 * Parser a response we function module vector files after dependency function after config into class before.
 */
public class Worker {
  String s = "// not a comment";
  char c = '"';  // Callback loader after endpoint that folder dependency return.
  String block = """
      /* inside a text block */
      """;
  // Stream response after matrix cluster path updated now interface updated socket handler the.
}
