#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecag/arith.hpp"

namespace ecag {

/// Either the point at infinity O or an affine point (x, y).
class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint affine(FieldElement x, FieldElement y) { return CurvePoint(std::move(x), std::move(y)); }

  bool is_infinity() const noexcept { return !xy_.has_value(); }
  /// Throws PoleAtInfinity on O.
  const FieldElement& x() const;
  const FieldElement& y() const;

  bool operator==(const CurvePoint& rhs) const;
  bool operator!=(const CurvePoint& rhs) const { return !(*this == rhs); }

 private:
  struct Affine {
    FieldElement x;
    FieldElement y;
  };
  CurvePoint() = default;
  CurvePoint(FieldElement x, FieldElement y) : xy_(Affine{std::move(x), std::move(y)}) {}

  std::optional<Affine> xy_;
};

std::string to_string(const CurvePoint& pt);

inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000;

/// Short Weierstrass curve y^2 = x^3 + a x + b over F_p, p > 3.
class Curve {
 public:
  /// Throws InvalidField (p <= 3 or composite) or SingularCurve.
  Curve(const BigInt& p, const BigInt& a, const BigInt& b);

  const FieldPtr& field() const noexcept { return field_; }
  const BigInt& modulus() const noexcept { return field_->modulus(); }
  const FieldElement& a() const noexcept { return a_; }
  const FieldElement& b() const noexcept { return b_; }

  FieldElement element(const BigInt& v) const { return FieldElement(field_, v); }
  FieldElement element(long v) const { return FieldElement(field_, v); }

  bool contains(const CurvePoint& pt) const;
  /// Builds an affine point, throwing NotOnCurve if (x, y) is not a solution.
  CurvePoint point(const BigInt& x, const BigInt& y) const;

  CurvePoint neg(const CurvePoint& pt) const;
  CurvePoint add(const CurvePoint& lhs, const CurvePoint& rhs) const;
  CurvePoint dbl(const CurvePoint& pt) const;
  /// Double-and-add; m must be non-negative.
  CurvePoint mul(const BigInt& m, const CurvePoint& pt) const;

  /// True for y^2 = x^3 + 1 with p = 2 (mod 3), the supersingular shape with p + 1 points.
  bool is_supersingular_shape() const;

  /// Uniform affine point on the supersingular curve: random y, x = cbrt(y^2 - 1).
  CurvePoint random_point_supersingular(Rng& rng) const;
  /// Same map for a caller-chosen y.
  CurvePoint supersingular_point_from_y(const FieldElement& y) const;

  /// O followed by every affine point in (x, y) order. Throws TooLarge when p exceeds `bound`.
  std::vector<CurvePoint> enumerate_points(std::uint64_t bound = kDefaultEnumerationBound) const;

 private:
  void require_on_curve(const CurvePoint& pt) const;
  CurvePoint add_unchecked(const CurvePoint& lhs, const CurvePoint& rhs) const;

  FieldPtr field_;
  FieldElement a_;
  FieldElement b_;
};

}  // namespace ecag
