// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "suite.hpp"

int main() {
  latw::suite::Options o;  // n <= 7 enumerations, n <= 6 partition oracle, |P| <= 5
  int failed = 0;
  for (const auto& r : latw::suite::run_all(o)) {
    std::printf("%s criterion %d: %s [%s; %.1f s]\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.detail.c_str(), r.seconds);
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}
