#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpq/forms.hpp"
#include "hpq/serialize.hpp"

namespace hpq {

/// One property check: the largest residual seen against its tolerance.
struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int cases = 0;
  bool passed = false;
  bool skipped = false;
  std::string note;
};

struct VerifyReport {
  std::string suite;
  Signature sig{2, 1};
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  /// True iff no check ran and failed.
  bool passed() const;
};

/// embedding, geodesics, submanifolds, boundary, horospheres, isometries, all.
const std::vector<std::string>& verify_suites();

/// Runs the named suite. Checks that need strata or causal types the signature
/// lacks are reported as skipped. Throws InvalidParameterError on an unknown suite.
VerifyReport run_verify(const std::string& suite, const Signature& sig, std::uint64_t seed);

Json to_json(const CheckResult& c);
Json to_json(const VerifyReport& r);

}  // namespace hpq
