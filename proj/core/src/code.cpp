#include "ecag/code.hpp"

#include <algorithm>

#include "linalg_kernel.hpp"

namespace ecag {

namespace {

template <class Fn>
decltype(auto) with_kernel(const FieldPtr& field, Fn&& fn) {
  if (field->fits_u64()) return fn(detail::WordField{field->modulus().get_ui()});
  return fn(detail::BigField{field->modulus()});
}

template <class F>
detail::Dense<F> to_dense(const F& f, const Matrix& m) {
  detail::Dense<F> d(m.rows(), m.cols(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d.at(r, c) = f.from(m.value(r, c));
  return d;
}

template <class F>
std::vector<typename F::value_type> to_words(const F& f, const Vector& v) {
  std::vector<typename F::value_type> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(f.from(e.value()));
  return out;
}

template <class F>
Vector from_words(const F& f, const FieldPtr& field, const std::vector<typename F::value_type>& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& e : v) out.emplace_back(field, f.to_big(e));
  return out;
}

void require_field(const Matrix& m, const Vector& v) {
  for (const auto& e : v) {
    if (!(*e.field() == *m.field())) {
      throw Error(ErrorKind::FieldMismatch, "vector entry from F_" + to_string(e.modulus()) + " used with F_" +
                                                to_string(m.field()->modulus()));
    }
  }
}

/// p^k <= bound, else TooLarge.
void require_enumerable(const CodeInstance& code, std::uint64_t bound) {
  BigInt total;
  mpz_pow_ui(total.get_mpz_t(), code.p().get_mpz_t(), code.k());
  if (total > BigInt(static_cast<unsigned long>(bound)) || !code.field()->fits_u64()) {
    throw Error(ErrorKind::TooLarge, "p^k = " + to_string(total) + " exceeds enumeration bound " +
                                         std::to_string(bound));
  }
}

/// First size-`size` column set (lexicographic) whose submatrix has rank < rows.
template <class F>
std::optional<std::vector<std::size_t>> first_deficient_support(const F& f, const detail::Dense<F>& gen,
                                                                std::size_t size) {
  if (size > gen.cols) return std::nullopt;
  std::vector<std::size_t> comb(size);
  for (std::size_t i = 0; i < size; ++i) comb[i] = i;
  do {
    if (detail::rank(f, detail::select_columns(gen, comb)) < gen.rows) return comb;
  } while (detail::next_combination(comb, gen.cols));
  return std::nullopt;
}

/// First size-`size` column set on which `received` is consistent with some codeword; returns the set and message.
template <class F>
std::optional<std::pair<std::vector<std::size_t>, std::vector<typename F::value_type>>> first_agreement_support(
    const F& f, const detail::Dense<F>& gen, const std::vector<typename F::value_type>& received, std::size_t size) {
  if (size > gen.cols) return std::nullopt;
  std::vector<std::size_t> comb(size);
  for (std::size_t i = 0; i < size; ++i) comb[i] = i;
  std::vector<typename F::value_type> target(size);
  do {
    for (std::size_t j = 0; j < size; ++j) target[j] = received[comb[j]];
    if (auto a = detail::solve_left(f, detail::select_columns(gen, comb), target)) {
      return std::make_pair(comb, std::move(*a));
    }
  } while (detail::next_combination(comb, gen.cols));
  return std::nullopt;
}

template <class F>
std::vector<typename F::value_type> combine_rows(const F& f, const detail::Dense<F>& gen,
                                                 const std::vector<typename F::value_type>& a) {
  std::vector<typename F::value_type> out(gen.cols, f.zero());
  for (std::size_t r = 0; r < gen.rows; ++r) {
    if (f.is_zero(a[r])) continue;
    for (std::size_t c = 0; c < gen.cols; ++c) out[c] = f.add(out[c], f.mul(a[r], gen.at(r, c)));
  }
  return out;
}

}  // namespace

// -- Matrix -----------------------------------------------------------------

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), values_(rows * cols, BigInt(0)) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<BigInt> values)
    : field_(std::move(field)), rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw Error(ErrorKind::ShapeError, std::to_string(values_.size()) + " entries for a " + std::to_string(rows_) +
                                           "x" + std::to_string(cols_) + " matrix");
  }
  for (auto& v : values_) v = mod(v, field_->modulus());
}

Matrix::Matrix(FieldPtr field, const std::vector<Vector>& rows)
    : Matrix(std::move(field), rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) throw Error(ErrorKind::ShapeError, "ragged rows");
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, rows[r][c]);
  }
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const { return FieldElement(field_, value(r, c)); }

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
  if (!(*v.field() == *field_)) throw Error(ErrorKind::FieldMismatch, "matrix entry from another field");
  values_[r * cols_ + c] = v.value();
}

Vector Matrix::row(std::size_t r) const {
  Vector out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

Matrix Matrix::columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw Error(ErrorKind::ShapeError, "column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out.values_[r * cols.size() + j] = value(r, cols[j]);
  }
  return out;
}

Matrix Matrix::without_column(std::size_t c) const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols_; ++j)
    if (j != c) keep.push_back(j);
  return columns(keep);
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && *field_ == *rhs.field_ && values_ == rhs.values_;
}

// -- linear algebra ---------------------------------------------------------

std::size_t rank(const Matrix& m) {
  return with_kernel(m.field(), [&](const auto& f) { return detail::rank(f, to_dense(f, m)); });
}

std::optional<Vector> solve_left(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) {
    throw Error(ErrorKind::ShapeError, "vector of length " + std::to_string(v.size()) + " against " +
                                           std::to_string(m.cols()) + " columns");
  }
  require_field(m, v);
  return with_kernel(m.field(), [&](const auto& f) -> std::optional<Vector> {
    auto a = detail::solve_left(f, to_dense(f, m), to_words(f, v));
    if (!a) return std::nullopt;
    return from_words(f, m.field(), *a);
  });
}

std::vector<Vector> left_nullspace(const Matrix& m) {
  return with_kernel(m.field(), [&](const auto& f) {
    std::vector<Vector> out;
    for (const auto& a : detail::left_nullspace(f, to_dense(f, m))) out.push_back(from_words(f, m.field(), a));
    return out;
  });
}

Vector row_times(const Vector& a, const Matrix& m) {
  if (a.size() != m.rows()) throw Error(ErrorKind::ShapeError, "coefficient vector length mismatch");
  require_field(m, a);
  Vector out = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (a[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += a[r] * m.at(r, c);
  }
  return out;
}

std::size_t weight(const Vector& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const FieldElement& e) { return !e.is_zero(); }));
}

Vector subtract(const Vector& lhs, const Vector& rhs) {
  if (lhs.size() != rhs.size()) throw Error(ErrorKind::ShapeError, "vector length mismatch");
  Vector out;
  out.reserve(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out.push_back(lhs[i] - rhs[i]);
  return out;
}

Vector zero_vector(const FieldPtr& field, std::size_t n) { return Vector(n, FieldElement(field, 0L)); }

void CodeInstance::validate() const {
  if (k() < 1 || k() >= n()) {
    throw Error(ErrorKind::ShapeError, "need 1 <= k < n, got k = " + std::to_string(k()) + ", n = " +
                                           std::to_string(n()));
  }
  if (rank(gen) != k()) throw Error(ErrorKind::ShapeError, "generator matrix is not of full row rank");
}

Matrix generator_matrix(std::span<const BasisFunction> basis, std::span<const CurvePoint> points) {
  if (basis.size() > points.size()) {
    throw Error(ErrorKind::ShapeError, std::to_string(basis.size()) + " functions at only " +
                                           std::to_string(points.size()) + " points");
  }
  if (points.empty()) throw Error(ErrorKind::ShapeError, "no evaluation points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_infinity()) throw Error(ErrorKind::PoleAtInfinity, "evaluation point " + std::to_string(i) + " is O");
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) {
        throw Error(ErrorKind::ShapeError, "evaluation points " + std::to_string(j) + " and " + std::to_string(i) +
                                               " coincide");
      }
    }
  }
  const FieldPtr& field = points.front().x().field();
  Matrix gen(field, basis.size(), points.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      try {
        gen.set(j, i, eval_function(basis[j], points[i]));
      } catch (const Error& e) {
        throw Error(e.kind(), "evaluating " + describe(basis[j]) + " at P" + std::to_string(i) + " = " +
                                  to_string(points[i]) + ": " + e.what());
      }
    }
  }
  return gen;
}

// -- support oracles --------------------------------------------------------

SupportScan min_distance_support_oracle(const CodeInstance& code, std::size_t size) {
  if (size > code.n()) throw Error(ErrorKind::ShapeError, "support size exceeds block length");
  return with_kernel(code.field(), [&](const auto& f) {
    const auto gen = to_dense(f, code.gen);
    SupportScan out;
    auto support = first_deficient_support(f, gen, size);
    if (!support) return out;
    out.exists_vanishing = true;
    out.support = *support;
    const auto null = detail::left_nullspace(f, detail::select_columns(gen, *support));
    out.witness = from_words(f, code.field(), combine_rows(f, gen, null.front()));
    return out;
  });
}

DistanceReport min_distance_support(const CodeInstance& code, ScanMode mode) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  DistanceReport report;
  auto record = [&](std::size_t size, const SupportScan& scan) {
    report.distance = n - size;
    report.support = scan.support;
    report.witness = scan.witness;
  };

  if (mode == ScanMode::Full) {
    for (std::size_t s = n + 1; s-- > 0;) {
      report.sizes_scanned.push_back(s);
      SupportScan scan = min_distance_support_oracle(code, s);
      if (scan.exists_vanishing) {
        record(s, scan);
        return report;
      }
    }
    return report;
  }

  // Singleton: some size-(k-1) support always vanishes, so d <= n - k + 1.
  report.sizes_scanned.push_back(k);
  SupportScan at_k = min_distance_support_oracle(code, k);
  if (!at_k.exists_vanishing) {
    record(k - 1, min_distance_support_oracle(code, k - 1));
    return report;
  }
  if (k + 1 <= n) {
    report.sizes_scanned.push_back(k + 1);
    SupportScan above = min_distance_support_oracle(code, k + 1);
    if (above.exists_vanishing) {
      record(k + 1, above);
      report.exact = false;
      return report;
    }
  }
  record(k, at_k);
  return report;
}

DistanceReport coset_distance_support(const CodeInstance& code, const Vector& received, ScanMode mode) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  if (received.size() != n) {
    throw Error(ErrorKind::ShapeError, "received word of length " + std::to_string(received.size()) +
                                           " for block length " + std::to_string(n));
  }
  require_field(code.gen, received);
  return with_kernel(code.field(), [&](const auto& f) {
    const auto gen = to_dense(f, code.gen);
    const auto target = to_words(f, received);
    DistanceReport report;
    auto attempt = [&](std::size_t size) {
      report.sizes_scanned.push_back(size);
      auto hit = first_agreement_support(f, gen, target, size);
      if (hit) {
        report.distance = n - size;
        report.support = hit->first;
        report.witness = from_words(f, code.field(), combine_rows(f, gen, hit->second));
      }
      return hit.has_value();
    };

    if (mode == ScanMode::Full) {
      for (std::size_t s = n + 1; s-- > 0;)
        if (attempt(s)) break;
      return report;
    }
    // A full-rank k x k minor agrees with any received word, so the distance is at most n - k.
    if (k + 1 > n || !attempt(k + 1)) {
      attempt(k);
      return report;
    }
    const DistanceReport at_k1 = report;
    if (k + 2 <= n && attempt(k + 2)) {
      report.exact = false;
      return report;
    }
    report.distance = at_k1.distance;
    report.support = at_k1.support;
    report.witness = at_k1.witness;
    return report;
  });
}

std::size_t coset_distance_support_oracle(const CodeInstance& code, const Vector& received, ScanMode mode) {
  DistanceReport report = coset_distance_support(code, received, mode);
  if (!report.exact) report = coset_distance_support(code, received, ScanMode::Full);
  return report.distance;
}

// -- exhaustive oracles -----------------------------------------------------

std::size_t min_distance_exhaustive(const CodeInstance& code, std::uint64_t bound) {
  require_enumerable(code, bound);
  const detail::WordField f{code.p().get_ui()};
  const auto gen = to_dense(f, code.gen);
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  std::size_t best = n + 1;

  // messages whose leading nonzero coordinate is 1
  std::vector<std::uint64_t> word(n);
  std::vector<std::uint64_t> digit(k);
  for (std::size_t lead = 0; lead < k; ++lead) {
    for (std::size_t c = 0; c < n; ++c) word[c] = gen.at(lead, c);
    std::fill(digit.begin(), digit.end(), 0);
    for (;;) {
      const auto w = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](auto v) { return v != 0; }));
      if (w > 0) best = std::min(best, w);
      // odometer over digits lead+1 .. k-1; every changed digit (wrap included) adds its row once
      std::size_t j = k;
      bool done = true;
      while (j-- > lead + 1) {
        for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], gen.at(j, c));
        if (++digit[j] < f.p) {
          done = false;
          break;
        }
        digit[j] = 0;
      }
      if (done) break;
    }
  }
  return best;
}

std::size_t coset_distance_exhaustive(const CodeInstance& code, const Vector& received, std::uint64_t bound) {
  if (received.size() != code.n()) throw Error(ErrorKind::ShapeError, "received word length mismatch");
  require_field(code.gen, received);
  require_enumerable(code, bound);
  const detail::WordField f{code.p().get_ui()};
  const auto gen = to_dense(f, code.gen);
  const auto target = to_words(f, received);
  const std::size_t n = code.n();
  const std::size_t k = code.k();

  std::vector<std::uint64_t> word(n, 0);
  std::vector<std::uint64_t> digit(k, 0);
  std::size_t best = n;
  for (;;) {
    std::size_t dist = 0;
    for (std::size_t c = 0; c < n; ++c) dist += word[c] != target[c] ? 1 : 0;
    best = std::min(best, dist);
    std::size_t j = k;
    bool done = true;
    while (j-- > 0) {
      for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], gen.at(j, c));
      if (++digit[j] < f.p) {
        done = false;
        break;
      }
      digit[j] = 0;
    }
    if (done) break;
  }
  return best;
}

}  // namespace ecag
