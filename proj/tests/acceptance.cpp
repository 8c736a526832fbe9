#include <cstdlib>
#include <iostream>

#include "ivg/selftest.hpp"

int main(int argc, char** argv) {
  ivg::selftest::Options options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 0);
  bool ok = true;
  ivg::selftest::run_acceptance(options, [&](const ivg::selftest::CriterionResult& r) {
    ok = ok && r.passed;
    std::cout << ivg::selftest::format_line(r) << std::endl;
  });
  std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
  return ok ? 0 : 1;
}
