#pragma once

// Subset sum over a prime field reduces to the minimum distance and to the
// coset (decoding) distance of elliptic evaluation codes:
//
//   pick p = -1 (mod q), p = 2 (mod 3), so y^2 = x^3 + 1 over F_p has a
//   cyclic group of order p + 1 containing a point G of order q;
//   put P_i = a_i G and Q = b G.
//
// A k-subset of the P_i sums to Q exactly when some function in
// L(Q + (k-1)O) vanishes on it, i.e. when the code has a word of weight n - k.
// Otherwise the code is MDS with distance n - k + 1.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecag/code.hpp"

namespace ecag {

/// k-subset sum modulo a prime q.
struct SubsetSumInstance {
  BigInt q;
  std::vector<BigInt> a;
  BigInt b;
  std::size_t k = 0;

  std::size_t n() const noexcept { return a.size(); }
  bool operator==(const SubsetSumInstance&) const = default;
};

/// Reduces every value modulo q; checks q > 3 prime and 1 <= k < n.
SubsetSumInstance reduce_mod_q(SubsetSumInstance inst);

/// reduce_mod_q plus the admissibility the reductions need: a_i distinct,
/// nonzero and different from b. Throws InvalidInstance naming the first
/// violated constraint.
SubsetSumInstance normalize(SubsetSumInstance inst);

struct SubsetSumAnswer {
  bool yes = false;
  std::optional<std::vector<std::size_t>> witness;  // k distinct indices, ascending
};

inline constexpr std::uint64_t kDefaultDpCells = 100'000'000;

/// Dynamic program over (prefix, count, residue). Needs n * k * q <= max_cells.
SubsetSumAnswer subset_sum_dp(const SubsetSumInstance& inst, std::uint64_t max_cells = kDefaultDpCells);

/// Plain (integer) subset sum to the prime-field version: q is a random prime
/// in (sum a_i + b, 2 (sum a_i + b)], so no sum can wrap. With `admissible`
/// the result is also checked by normalize().
SubsetSumInstance lift_plain_subset_sum(const std::vector<BigInt>& a, const BigInt& b, std::size_t k, Rng& rng,
                                        bool admissible = true);

/// Named values drawn during a reduction. Together with the seed and the
/// draw offset they replay the run exactly.
struct Transcript {
  std::uint64_t seed = 0;
  std::uint64_t draws_before = 0;
  std::uint64_t draws_after = 0;
  std::vector<std::pair<std::string, std::string>> samples;

  void note(std::string name, std::string value) { samples.emplace_back(std::move(name), std::move(value)); }
};

struct GroupParams {
  BigInt q;
  BigInt p;
  Curve curve;          // y^2 = x^3 + 1 over F_p
  CurvePoint generator; // order q
};

/// 64 * ceil(log2 3q)^2
std::uint64_t default_prime_attempts(const BigInt& q);

/// p = a + 3 q x with a = crt2(-1 mod q, 2 mod 3) and x uniform in [1, q].
/// max_attempts = 0 selects default_prime_attempts(q).
BigInt find_prime_p(const BigInt& q, Rng& rng, std::uint64_t max_attempts = 0, Transcript* transcript = nullptr);

inline constexpr std::uint64_t kDefaultPointAttempts = 64;

/// Finds p, then samples P until G = ((p + 1) / q) P != O; verifies q G = O.
GroupParams build_group_generator(const BigInt& q, Rng& rng, Transcript* transcript = nullptr);

struct Claim {
  std::size_t yes_distance = 0;  // n - k
  std::size_t no_distance = 0;   // n - k + 1
  bool operator==(const Claim&) const = default;
};

struct ReductionOutput {
  CodeInstance code;
  std::optional<Vector> received;  // decoding reduction only
  Claim claim;
  GroupParams params;
  Transcript transcript;
};

/// [n, k]_p code from L(Q + (k-1)O) at P_i = a_i G. Requires k >= 2 and b != 0.
ReductionOutput reduce_mdp(const SubsetSumInstance& inst, Rng& rng);

/// [n, k]_p code from L(kO) at P_i = a_i G, for the b = 0 question.
ReductionOutput reduce_mdp_one_point(const SubsetSumInstance& inst, Rng& rng);

/// [n, k-1]_p code from L((k-1)O) at P_i = a_i G with received word f'(P_i).
ReductionOutput reduce_mld(const SubsetSumInstance& inst, Rng& rng);

// -- discrete logarithms through minimum-distance queries --------------------

struct EcdlpParams {
  Curve curve;
  CurvePoint base;
  BigInt order;  // prime order of base
};

struct EcdlpResult {
  BigInt log;                 // base * log = target
  std::uint64_t samples = 0;  // random multipliers r drawn
  std::uint64_t queries = 0;  // minimum-distance questions asked
};

/// Largest even number <= floor(log2 order).
std::size_t ecdlp_bits(const BigInt& order);

/// Recovers l with l * base = target by randomising the target to R = r T and
/// reading the binary digits of log(R) off punctured codes from L(R + (n/2 - 1)O)
/// at P_i = 2^i base. Every candidate is verified; failures resample.
EcdlpResult ecdlp_solve(const EcdlpParams& params, const CurvePoint& target, Rng& rng,
                        std::uint64_t max_samples = 1000);

}  // namespace ecag
