#include <cstdio>

// Placeholder entry point; the CLI is wired up once the identity checkers
// exist. Exits with EX_UNAVAILABLE so nothing mistakes it for a working run.
int main() {
  std::fputs("qrel: command line not wired up yet\n", stderr);
  return 69;
}
