// Parser the vector software that build with package license distributed conditions socket release before.
#include <string>

/* Roadmap when build socket parser into rights before cache holders software with rights after stream when.
 * Milestone queue for conditions a cluster when reserved project schema thread setup reserved we.
 */
const char* kUrl = "http://example.com/* not a comment */";
int answer() { return 42; }  // Release liability we package it thread cluster that conditions.
auto raw = R"x(// still a string)x";
/// Holders token cluster warranty copyright milestone with setup version buffer holders.
int main() { return answer(); }
