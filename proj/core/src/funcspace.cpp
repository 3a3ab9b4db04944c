#include "ecag/funcspace.hpp"

#include <algorithm>

namespace ecag {

std::string to_string(const Monomial& m) {
  if (m.x_exp == 0 && m.y_exp == 0) return "1";
  std::string s;
  if (m.x_exp == 1) s += "x";
  if (m.x_exp > 1) s += "x^" + std::to_string(m.x_exp);
  if (m.y_exp == 1) s += "y";
  return s;
}

std::vector<Monomial> monomial_basis(unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidDegree, "L(0) holds only constants; degree must be >= 1");
  std::vector<Monomial> basis{Monomial{0, 0}};
  // every pole order t >= 2 is hit by exactly one monomial
  for (unsigned t = 2; t <= m; ++t) {
    basis.push_back(t % 2 == 0 ? Monomial{t / 2, 0} : Monomial{(t - 3) / 2, 1});
  }
  return basis;
}

FieldElement eval_monomial(const Monomial& mon, const CurvePoint& pt) {
  if (pt.is_infinity()) throw Error(ErrorKind::PoleAtInfinity, to_string(mon) + " has a pole at O");
  FieldElement v = pt.x().pow(mon.x_exp);
  if (mon.y_exp == 1) v *= pt.y();
  return v;
}

std::optional<FieldElement> FPrime::eval_chord_form(const CurvePoint& pt) const {
  const FieldElement den = pt.x() - q_.x();
  if (den.is_zero()) return std::nullopt;
  return (pt.y() - slope_ * pt.x() - intercept_) / den;
}

std::optional<FieldElement> FPrime::eval_product_form(const CurvePoint& pt) const {
  const FieldElement den = pt.y() + slope_ * pt.x() + intercept_;
  if (den.is_zero()) return std::nullopt;
  return (pt.x() - q1_.x()) * (pt.x() - q2_.x()) / den;
}

FieldElement FPrime::eval(const CurvePoint& pt) const {
  if (pt.is_infinity()) throw Error(ErrorKind::PoleAtInfinity, "f' has a pole at O");
  if (pt == q_) throw Error(ErrorKind::PoleAtQ, "f' has a pole at Q = " + to_string(q_));
  if (auto v = eval_chord_form(pt)) return *v;
  // pt = -Q: the product form's denominator there is -2 y_Q, nonzero since -Q != Q
  if (auto v = eval_product_form(pt)) return *v;
  throw Error(ErrorKind::EvaluationError, "f' undefined at " + to_string(pt));
}

FPrime fprime_through(const Curve& curve, const CurvePoint& q, const CurvePoint& q_prime) {
  if (q.is_infinity()) throw Error(ErrorKind::InvalidDivisor, "f' needs an affine pole Q");
  if (!curve.contains(q) || !curve.contains(q_prime)) {
    throw Error(ErrorKind::NotOnCurve, "Q and Q' must lie on the curve");
  }
  if (q_prime.is_infinity() || q_prime == q) {
    throw Error(ErrorKind::InvalidDivisor, "Q' must avoid {Q, O}");
  }
  const CurvePoint q2 = curve.add(q, curve.neg(q_prime));
  // Q'' = O would need Q' = Q; x(Q') = x(Q'') with Q' != Q'' would need Q = O.
  FieldElement slope = curve.element(0);
  if (q2 == q_prime) {
    slope = (curve.element(3) * q_prime.x() * q_prime.x() + curve.a()) / (curve.element(2) * q_prime.y());
  } else {
    slope = (q2.y() - q_prime.y()) / (q2.x() - q_prime.x());
  }
  FieldElement intercept = q_prime.y() - slope * q_prime.x();
  return FPrime(q, q_prime, q2, std::move(slope), std::move(intercept));
}

FPrime build_fprime(const Curve& curve, const CurvePoint& q, Rng& rng) {
  if (q.is_infinity()) throw Error(ErrorKind::InvalidDivisor, "f' needs an affine pole Q");
  if (curve.is_supersingular_shape()) {
    // the sampler is uniform over the p affine points; O is never produced
    for (;;) {
      CurvePoint candidate = curve.random_point_supersingular(rng);
      if (candidate != q) return fprime_through(curve, q, candidate);
    }
  }
  std::vector<CurvePoint> pool = curve.enumerate_points();
  std::erase_if(pool, [&](const CurvePoint& pt) { return pt.is_infinity() || pt == q; });
  if (pool.empty()) throw Error(ErrorKind::InvalidDivisor, "no admissible Q' on this curve");
  const BigInt idx = rand_below(BigInt(static_cast<unsigned long>(pool.size())), rng);
  return fprime_through(curve, q, pool[idx.get_ui()]);
}

FieldElement eval_function(const BasisFunction& f, const CurvePoint& pt) {
  return std::visit([&](const auto& fn) -> FieldElement {
    using T = std::decay_t<decltype(fn)>;
    if constexpr (std::is_same_v<T, Monomial>) {
      return eval_monomial(fn, pt);
    } else {
      return fn.eval(pt);
    }
  }, f);
}

std::string describe(const BasisFunction& f) {
  if (const auto* mon = std::get_if<Monomial>(&f)) return to_string(*mon);
  const auto& fp = std::get<FPrime>(f);
  return "f'[Q=" + to_string(fp.pole()) + ",Q'=" + to_string(fp.q_prime()) + "]";
}

}  // namespace ecag
