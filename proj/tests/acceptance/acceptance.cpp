// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <cstdio>
#include <iostream>
#include <string>

#include "rcq/suites.hpp"

int main(int argc, char** argv) {
  rcq::SuiteConfig cfg;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-v") verbose = true;
  }
  int failed = 0;
  double total = 0;
  for (const auto& name : rcq::suite_names()) {
    rcq::Suite s = rcq::build_suite(name, cfg);
    rcq::VerificationReport r = rcq::run_suite(s);
    total += r.seconds;
    std::printf("%s criterion %d: %s [%s] %zu/%zu cases, %.1f s\n", r.passed() ? "PASS" : "FAIL", s.criterion,
                s.title.c_str(), s.tolerance.c_str(), r.cases.size() - r.failures(), r.cases.size(), r.seconds);
    if (r.notes.contains("diagnostics")) std::printf("     diagnostics %s\n", r.notes["diagnostics"].dump().c_str());
    if (!r.passed()) {
      ++failed;
      std::cout << r.to_text(verbose);
    }
    std::fflush(stdout);
  }
  std::printf("%s: %d of 10 criteria failed, %.1f s total\n", failed ? "FAIL" : "PASS", failed, total);
  return failed ? 1 : 0;
}
