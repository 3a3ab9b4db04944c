#include <gtest/gtest.h>

#include <optional>

#include "ecag/code.hpp"
#include "ecag/error.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace ecag {
namespace {

FieldPtr F(std::uint64_t p) { return make_field(BigInt(static_cast<unsigned long>(p))); }

Matrix mat(std::uint64_t p, std::size_t r, std::size_t c, std::vector<long> v) {
  std::vector<BigInt> values(v.begin(), v.end());
  return Matrix(F(p), r, c, std::move(values));
}

Vector vec(const FieldPtr& f, std::vector<long> v) {
  Vector out;
  for (long x : v) out.emplace_back(f, x);
  return out;
}

std::optional<ErrorKind> kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

TEST(Matrix, ShapeAndAccess) {
  const Matrix m = mat(5, 2, 3, {1, 0, 0, 0, 1, 7});
  EXPECT_EQ(m.value(1, 2), 2);
  EXPECT_EQ(m.at(0, 0).value(), 1);
  EXPECT_EQ(kind_of([] { mat(5, 2, 3, {1, 2}); }), ErrorKind::ShapeError);
  const std::size_t cols[] = {0, 2};
  EXPECT_EQ(m.columns(cols), mat(5, 2, 2, {1, 0, 0, 2}));
  EXPECT_EQ(m.without_column(1), mat(5, 2, 2, {1, 0, 0, 2}));
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(mat(5, 2, 3, {1, 0, 0, 0, 1, 0})), 2u);
  EXPECT_EQ(rank(mat(5, 2, 3, {1, 2, 3, 2, 4, 6})), 1u);
  EXPECT_EQ(rank(mat(5, 2, 2, {0, 0, 0, 0})), 0u);
}

TEST(LinearAlgebra, RandomProperties) {
  Rng rng(31);
  for (std::uint64_t p : {2ull, 5ull, 7ull, 101ull}) {
    const FieldPtr f = F(p);
    for (int t = 0; t < 150; ++t) {
      const std::size_t r = gen::uniform(rng, 1, 6), c = gen::uniform(rng, 1, 7);
      Matrix m = gen::random_matrix(rng, f, r, c);
      if (t % 3 == 0 && r > 1) {  // force dependence
        for (std::size_t j = 0; j < c; ++j) m.set(r - 1, j, m.at(0, j) * FieldElement(f, 3));
      }
      Matrix tr(f, c, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) tr.set(j, i, m.at(i, j));
      const std::size_t rk = rank(m);
      EXPECT_EQ(rk, rank(tr));
      EXPECT_LE(rk, std::min(r, c));

      // solve_left replays for vectors in the row space
      const Vector a = gen::random_vector(rng, f, r);
      const Vector v = row_times(a, m);
      const auto sol = solve_left(m, v);
      ASSERT_TRUE(sol.has_value());
      EXPECT_EQ(row_times(*sol, m), v);

      // nullspace: dimension r - rank, each vector annihilates m
      const auto null = left_nullspace(m);
      EXPECT_EQ(null.size(), r - rk);
      for (const auto& z : null) {
        EXPECT_GT(weight(z), 0u);
        EXPECT_EQ(weight(row_times(z, m)), 0u);
      }
    }
  }
}

TEST(LinearAlgebra, SolveLeftDetectsOutsideRowSpace) {
  const Matrix m = mat(5, 2, 3, {1, 0, 0, 0, 1, 0});
  EXPECT_FALSE(solve_left(m, vec(m.field(), {0, 0, 1})).has_value());
  const auto sol = solve_left(m, vec(m.field(), {3, 4, 0}));
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(*sol, vec(m.field(), {3, 4}));
}

TEST(LinearAlgebra, NullspaceOfDeficientBlock) {
  const Matrix m = mat(7, 3, 3, {1, 2, 3, 2, 4, 6, 0, 1, 1});
  const auto null = left_nullspace(m);
  ASSERT_EQ(null.size(), 1u);
  EXPECT_EQ(weight(row_times(null[0], m)), 0u);
}

TEST(CodeInstance, Validate) {
  EXPECT_NO_THROW((CodeInstance{mat(5, 2, 3, {1, 0, 0, 0, 1, 0}), {}}.validate()));
  EXPECT_EQ(kind_of([] { CodeInstance{mat(5, 2, 3, {1, 2, 3, 2, 4, 6}), {}}.validate(); }), ErrorKind::ShapeError);
  EXPECT_EQ(kind_of([] { CodeInstance{mat(5, 2, 2, {1, 0, 0, 1}), {}}.validate(); }), ErrorKind::ShapeError);
}

TEST(GeneratorMatrix, Examples) {
  const Curve c(BigInt(5), BigInt(0), BigInt(1));
  const std::vector<CurvePoint> pts{c.point(BigInt(0), BigInt(1)), c.point(BigInt(2), BigInt(2)),
                                    c.point(BigInt(4), BigInt(0))};
  const std::vector<BasisFunction> ones{Monomial{0, 0}};
  EXPECT_EQ(generator_matrix(ones, pts), mat(5, 1, 3, {1, 1, 1}));
  const std::vector<BasisFunction> lin{Monomial{0, 0}, Monomial{1, 0}};
  const Matrix g = generator_matrix(lin, pts);
  EXPECT_EQ(g, mat(5, 2, 3, {1, 1, 1, 0, 2, 4}));
  EXPECT_EQ(rank(g), 2u);

  const std::vector<CurvePoint> dup{pts[0], pts[0]};
  EXPECT_EQ(kind_of([&] { generator_matrix(ones, dup); }), ErrorKind::ShapeError);
  const std::vector<CurvePoint> with_o{pts[0], CurvePoint::infinity()};
  EXPECT_EQ(kind_of([&] { generator_matrix(ones, with_o); }), ErrorKind::PoleAtInfinity);
}

TEST(SupportOracle, Examples) {
  const CodeInstance code{mat(5, 2, 3, {1, 0, 0, 0, 1, 0}), {}};
  const SupportScan scan = min_distance_support_oracle(code, 2);
  ASSERT_TRUE(scan.exists_vanishing);
  EXPECT_EQ(scan.support, (std::vector<std::size_t>{0, 2}));
  ASSERT_TRUE(scan.witness.has_value());
  EXPECT_EQ(weight(*scan.witness), 1u);
  EXPECT_FALSE(min_distance_support_oracle(code, 3).exists_vanishing);
  EXPECT_EQ(min_distance_exhaustive(code), 1u);
  const DistanceReport rep = min_distance_support(code);
  EXPECT_EQ(rep.distance, 1u);
  EXPECT_TRUE(rep.exact);
}

TEST(SupportOracle, AgreesWithExhaustiveOnRandomCodes) {
  Rng rng(32);
  int inexact = 0;
  for (int t = 0; t < 300; ++t) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11}[gen::uniform(rng, 0, 4)];
    const std::size_t n = gen::uniform(rng, 2, 8);
    const std::size_t k = gen::uniform(rng, 1, std::min<std::size_t>(n - 1, 4));
    const CodeInstance code{gen::random_full_rank(rng, F(p), k, n), {}};
    const std::size_t brute = oracle::brute_min_distance(gen::to_u64_rows(code.gen), p);
    EXPECT_EQ(min_distance_exhaustive(code), brute);
    EXPECT_EQ(min_distance_support(code, ScanMode::Full).distance, brute);
    const DistanceReport dich = min_distance_support(code);
    if (dich.exact) {
      EXPECT_EQ(dich.distance, brute);
    } else {
      ++inexact;
      EXPECT_LT(brute, n - k);  // only codes below the dichotomy are flagged
    }
    const DistanceReport full = min_distance_support(code, ScanMode::Full);
    ASSERT_TRUE(full.witness.has_value());
    EXPECT_EQ(weight(*full.witness), brute);
    EXPECT_TRUE(solve_left(code.gen, *full.witness).has_value());
  }
  EXPECT_GT(inexact, 0);
}

TEST(CosetOracle, Examples) {
  const CodeInstance code{mat(5, 2, 3, {1, 0, 0, 0, 1, 0}), {}};
  const FieldPtr f = code.field();
  EXPECT_EQ(coset_distance_support_oracle(code, vec(f, {2, 3, 0})), 0u);
  EXPECT_EQ(coset_distance_exhaustive(code, vec(f, {2, 3, 0})), 0u);
  EXPECT_EQ(coset_distance_support_oracle(code, vec(f, {0, 0, 0})), 0u);
  EXPECT_EQ(coset_distance_exhaustive(code, vec(f, {0, 0, 0})), 0u);
  EXPECT_EQ(coset_distance_support_oracle(code, vec(f, {2, 3, 1})), 1u);
  EXPECT_EQ(coset_distance_exhaustive(code, vec(f, {2, 3, 1})), 1u);
  EXPECT_EQ(kind_of([&] { coset_distance_support_oracle(code, vec(f, {1, 1})); }), ErrorKind::ShapeError);
}

TEST(CosetOracle, AgreesWithExhaustiveOnRandomWords) {
  Rng rng(33);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[gen::uniform(rng, 0, 3)];
    const std::size_t n = gen::uniform(rng, 2, 8);
    const std::size_t k = gen::uniform(rng, 1, std::min<std::size_t>(n - 1, 4));
    const CodeInstance code{gen::random_full_rank(rng, F(p), k, n), {}};
    Vector r = gen::random_vector(rng, code.field(), n);
    if (t % 4 == 0) {  // a codeword one symbol off
      r = row_times(gen::random_vector(rng, code.field(), k), code.gen);
      r[0] += FieldElement(code.field(), 1);
    }
    const std::size_t brute = oracle::brute_coset_distance(gen::to_u64_rows(code.gen), gen::to_u64(r), p);
    EXPECT_EQ(coset_distance_exhaustive(code, r), brute);
    EXPECT_EQ(coset_distance_support_oracle(code, r), brute);
    EXPECT_EQ(coset_distance_support_oracle(code, r, ScanMode::Full), brute);
    const DistanceReport full = coset_distance_support(code, r, ScanMode::Full);
    ASSERT_TRUE(full.witness.has_value());
    EXPECT_EQ(weight(subtract(r, *full.witness)), brute);
  }
}

TEST(Exhaustive, RespectsBound) {
  const CodeInstance code{mat(101, 3, 4, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1}), {}};
  EXPECT_EQ(kind_of([&] { min_distance_exhaustive(code, 1000); }), ErrorKind::TooLarge);
  EXPECT_EQ(min_distance_exhaustive(code), 2u);
  const CodeInstance wide{Matrix(make_field(BigInt("18446744073709551557")), 1, 2,
                                 std::vector<BigInt>{BigInt(1), BigInt(1)}), {}};
  EXPECT_EQ(kind_of([&] { min_distance_exhaustive(wide); }), ErrorKind::TooLarge);
  EXPECT_EQ(min_distance_support(wide).distance, 2u);
}

}  // namespace
}  // namespace ecag
