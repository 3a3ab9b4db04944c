#pragma once

// Riemann-Roch spaces on an elliptic curve. L(mO) is spanned by monomials
// x^i y^j (j in {0,1}) with pole order 2i + 3j <= m at O. L(Q + (k-1)O)
// needs one extra function with a simple pole at Q; we use the ratio of the
// chord through Q', Q'' = Q - Q' and the vertical line through Q.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ecag/curve.hpp"

namespace ecag {

struct Monomial {
  unsigned x_exp = 0;
  unsigned y_exp = 0;  // 0 or 1

  unsigned pole_order() const noexcept { return 2 * x_exp + 3 * y_exp; }
  bool operator==(const Monomial&) const = default;
};

std::string to_string(const Monomial& m);

/// Basis of L(mO), sorted by pole order; has exactly m elements. m = 0 is rejected.
std::vector<Monomial> monomial_basis(unsigned m);

/// x^i y^j at an affine point. Throws PoleAtInfinity at O.
FieldElement eval_monomial(const Monomial& mon, const CurvePoint& pt);

/// f' = l1 / l2 with l1 : y = slope*x + intercept through Q' and Q'', l2 : x = x_Q.
/// Its divisor is Q' + Q'' - Q - O.
class FPrime {
 public:
  FPrime(CurvePoint q, CurvePoint q1, CurvePoint q2, FieldElement slope, FieldElement intercept)
      : q_(std::move(q)), q1_(std::move(q1)), q2_(std::move(q2)), slope_(std::move(slope)),
        intercept_(std::move(intercept)) {}

  const CurvePoint& pole() const noexcept { return q_; }
  const CurvePoint& q_prime() const noexcept { return q1_; }
  const CurvePoint& q_double_prime() const noexcept { return q2_; }
  const FieldElement& slope() const noexcept { return slope_; }
  const FieldElement& intercept() const noexcept { return intercept_; }

  /// (y - slope*x - intercept) / (x - x_Q); empty where x = x_Q.
  std::optional<FieldElement> eval_chord_form(const CurvePoint& pt) const;
  /// (x - x_Q')(x - x_Q'') / (y + slope*x + intercept); empty where the denominator vanishes.
  std::optional<FieldElement> eval_product_form(const CurvePoint& pt) const;

  /// Chord form everywhere except at -Q, where the product form takes over.
  /// Throws PoleAtQ at Q and PoleAtInfinity at O.
  FieldElement eval(const CurvePoint& pt) const;

 private:
  CurvePoint q_;
  CurvePoint q1_;
  CurvePoint q2_;
  FieldElement slope_;
  FieldElement intercept_;
};

/// f' for a caller-chosen Q' (Q' not in {Q, O}).
FPrime fprime_through(const Curve& curve, const CurvePoint& q, const CurvePoint& q_prime);

/// f' with Q' drawn uniformly from E(F_p) \ {Q, O}. Sampling uses the cube-root
/// map on the supersingular curve and enumeration on other small curves.
FPrime build_fprime(const Curve& curve, const CurvePoint& q, Rng& rng);

/// Either basis shape a generator matrix row can come from.
using BasisFunction = std::variant<Monomial, FPrime>;

FieldElement eval_function(const BasisFunction& f, const CurvePoint& pt);
std::string describe(const BasisFunction& f);

}  // namespace ecag
