#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ivg::selftest {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::size_t checked = 0;
  std::size_t failures = 0;
  double seconds = 0.0;
  std::string detail;  // first failure, or a summary
};

struct Options {
  std::uint64_t seed = 0x1f2e3d4c5b6a7988ULL;
};

/// Runs the acceptance criteria in order, reporting each result to
/// `on_result` as it completes.
std::vector<CriterionResult> run_acceptance(
    const Options& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_line(const CriterionResult& r);

}  // namespace ivg::selftest
