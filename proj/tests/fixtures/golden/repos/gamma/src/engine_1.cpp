// Function method update for class into failure the fixed include should fixed loader bug.
#include <string>

/* Directory after dependencies timeout issue exception exception request the crash that module fixed into.
 * Interface folder regression crash crash fixed this endpoint api a exception with fixed.
 */
const char* kUrl = "http://example.com/* not a comment */";
int answer() { return 42; }  // File for error after segfault parameter include dependencies.
auto raw = R"x(// still a string)x";
/// Fix endpoint timeout parameter file handler loader return the loader for parameter for.
int main() { return answer(); }
