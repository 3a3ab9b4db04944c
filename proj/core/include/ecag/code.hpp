#pragma once

// Evaluation codes, linear algebra over F_p, and two independent families of
// distance oracles: support-rank scans over column subsets, and brute-force
// enumeration of codewords.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecag/funcspace.hpp"

namespace ecag {

using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  /// rows x cols zero matrix.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  /// Row-major values, reduced mod p.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<BigInt> values);
  Matrix(FieldPtr field, const std::vector<Vector>& rows);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement at(std::size_t r, std::size_t c) const;
  const BigInt& value(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const FieldElement& v);

  Vector row(std::size_t r) const;
  Matrix columns(std::span<const std::size_t> cols) const;
  Matrix without_column(std::size_t c) const;

  const std::vector<BigInt>& values() const noexcept { return values_; }
  bool operator==(const Matrix& rhs) const;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> values_;
};

std::size_t rank(const Matrix& m);
/// a with a * m = v, or nothing when v is not in the row space.
std::optional<Vector> solve_left(const Matrix& m, const Vector& v);
/// Basis of the left null space { a : a * m = 0 }.
std::vector<Vector> left_nullspace(const Matrix& m);
/// a * m
Vector row_times(const Vector& a, const Matrix& m);
std::size_t weight(const Vector& v);
Vector subtract(const Vector& lhs, const Vector& rhs);
Vector zero_vector(const FieldPtr& field, std::size_t n);

/// Where a code came from. All fields are optional; codes read back from a
/// file carry whatever the writer recorded.
struct Provenance {
  std::string variant;   // "mdp", "mdp-one-point", "mld", "ecdlp", or empty
  std::string divisor;   // e.g. "Q + 2*O"
  std::optional<BigInt> q;
  std::optional<BigInt> curve_a;
  std::optional<BigInt> curve_b;
  std::optional<CurvePoint> generator;
  std::optional<CurvePoint> pole;
  std::vector<CurvePoint> points;
  std::optional<std::uint64_t> seed;

  bool operator==(const Provenance&) const = default;
};

struct CodeInstance {
  Matrix gen;  // k x n generator matrix
  Provenance provenance;

  const FieldPtr& field() const noexcept { return gen.field(); }
  const BigInt& p() const noexcept { return gen.field()->modulus(); }
  std::size_t n() const noexcept { return gen.cols(); }
  std::size_t k() const noexcept { return gen.rows(); }

  /// Throws ShapeError unless k < n and rank(gen) = k.
  void validate() const;
};

/// Entry (j, i) = basis[j](points[i]). Points must be affine and distinct.
Matrix generator_matrix(std::span<const BasisFunction> basis, std::span<const CurvePoint> points);

struct SupportScan {
  bool exists_vanishing = false;
  std::vector<std::size_t> support;  // lexicographically first qualifying column set
  std::optional<Vector> witness;     // nonzero codeword vanishing on `support`
};

/// Scans all size-`size` column sets S for rank(gen[:, S]) < k.
SupportScan min_distance_support_oracle(const CodeInstance& code, std::size_t size);

enum class ScanMode {
  /// Only the two support sizes that decide a designed-distance dichotomy.
  Dichotomy,
  /// Every support size, from n downward.
  Full,
};

struct DistanceReport {
  std::size_t distance = 0;
  /// False when a dichotomy scan found the distance below the range it
  /// covers; `distance` is then only an upper bound.
  bool exact = true;
  std::vector<std::size_t> sizes_scanned;
  std::vector<std::size_t> support;  // agreement / vanishing coordinates of the witness
  std::optional<Vector> witness;     // minimum-weight codeword, or nearest codeword
};

/// Minimum distance by support scanning. Dichotomy mode checks sizes k and k + 1.
DistanceReport min_distance_support(const CodeInstance& code, ScanMode mode = ScanMode::Dichotomy);

inline constexpr std::uint64_t kDefaultExhaustiveBound = 10'000'000;

/// Exact minimum weight over messages up to scalar multiples. Needs p^k <= bound.
std::size_t min_distance_exhaustive(const CodeInstance& code, std::uint64_t bound = kDefaultExhaustiveBound);

/// n - max{|S| : received restricted to S lies in the row space of gen[:, S]}.
/// Dichotomy mode checks sizes k + 1 and k + 2 for a k-dimensional code.
DistanceReport coset_distance_support(const CodeInstance& code, const Vector& received,
                                      ScanMode mode = ScanMode::Dichotomy);
/// Exact distance; falls back to a full scan when the dichotomy is inconclusive.
std::size_t coset_distance_support_oracle(const CodeInstance& code, const Vector& received,
                                          ScanMode mode = ScanMode::Dichotomy);

/// min over all p^k codewords c of weight(received - c). Needs p^k <= bound.
std::size_t coset_distance_exhaustive(const CodeInstance& code, const Vector& received,
                                      std::uint64_t bound = kDefaultExhaustiveBound);

}  // namespace ecag
