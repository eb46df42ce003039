#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tsrforge/limits.hpp"

namespace tsrforge {

enum class VerifyLevel { Quick, Full };
VerifyLevel parse_verify_level(std::string_view name);

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Quick;
  /// Negative control: the characteristic-polynomial formula is perturbed before checking.
  bool inject_fault = false;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  Limits limits{};
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every named invariant check; on_result sees each result as it completes.
std::vector<CheckResult> run_verify(const VerifyOptions& options,
                                    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace tsrforge
