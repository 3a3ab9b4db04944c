#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ecag/reduction.hpp"

namespace ecag::cli {

enum ExitCode : int {
  kOk = 0,
  kClaimMismatch = 1,
  kInvalidInput = 2,
  kResourceBound = 3,
};

int exit_code_for(ErrorKind kind) noexcept;

enum class VerifyMode { Mdp, Mld, Both };

/// One reduction pushed through its distance oracle and compared with the
/// subset-sum ground truth.
struct VerifyOutcome {
  std::string variant;  // "mdp", "mdp-one-point" or "mld"
  std::size_t n = 0;
  std::size_t k = 0;
  BigInt p;
  Claim claim;
  bool yes = false;     // subset-sum DP answer
  std::size_t expected = 0;
  DistanceReport oracle;
  /// Distance never drops below the designed n - k: no vanishing support of
  /// size k + 1 (and, for decoding, no agreement set of size k + 1).
  bool designed_distance_ok = true;
  /// Decoding only: the received word lies outside the code.
  bool received_outside_code = true;
  /// YES only: the oracle's size-k support indexes a subset summing to b.
  bool support_sums_to_b = true;

  bool matches() const {
    return oracle.exact && oracle.distance == expected && designed_distance_ok && received_outside_code &&
           support_sums_to_b;
  }
};

struct VerifyReport {
  SubsetSumInstance instance;
  SubsetSumAnswer answer;
  std::vector<VerifyOutcome> outcomes;

  bool ok() const;
};

/// instance -> reduction -> support oracle -> subset-sum DP. Each reduction
/// draws from its own Rng(seed), so the report is a pure function of the inputs.
VerifyReport verify_instance(const SubsetSumInstance& inst, std::uint64_t seed, VerifyMode mode = VerifyMode::Both,
                             ScanMode scan = ScanMode::Dichotomy);

std::string format_report(const VerifyReport& report);

/// Entry point behind the `ecag` executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ecag::cli
