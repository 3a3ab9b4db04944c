#include "ecag/curve.hpp"

#include <unordered_map>

namespace ecag {

const FieldElement& CurvePoint::x() const {
  if (!xy_) throw Error(ErrorKind::PoleAtInfinity, "point at infinity has no affine x");
  return xy_->x;
}

const FieldElement& CurvePoint::y() const {
  if (!xy_) throw Error(ErrorKind::PoleAtInfinity, "point at infinity has no affine y");
  return xy_->y;
}

bool CurvePoint::operator==(const CurvePoint& rhs) const {
  if (is_infinity() || rhs.is_infinity()) return is_infinity() == rhs.is_infinity();
  return xy_->x == rhs.xy_->x && xy_->y == rhs.xy_->y;
}

std::string to_string(const CurvePoint& pt) {
  if (pt.is_infinity()) return "O";
  return "(" + to_string(pt.x()) + "," + to_string(pt.y()) + ")";
}

namespace {

FieldPtr checked_field(const BigInt& p) {
  if (p <= 3) throw Error(ErrorKind::InvalidField, "curve modulus must exceed 3, got " + to_string(p));
  return make_field(p);
}

}  // namespace

Curve::Curve(const BigInt& p, const BigInt& a, const BigInt& b)
    : field_(checked_field(p)), a_(field_, a), b_(field_, b) {
  const FieldElement disc = element(-16) * (element(4) * a_ * a_ * a_ + element(27) * b_ * b_);
  if (disc.is_zero()) {
    throw Error(ErrorKind::SingularCurve, "discriminant of y^2 = x^3 + " + to_string(a_) + "x + " + to_string(b_) +
                                              " vanishes mod " + to_string(p));
  }
}

bool Curve::contains(const CurvePoint& pt) const {
  if (pt.is_infinity()) return true;
  const FieldElement& x = pt.x();
  const FieldElement& y = pt.y();
  if (!(*x.field() == *field_) || !(*y.field() == *field_)) return false;
  return y * y == x * x * x + a_ * x + b_;
}

CurvePoint Curve::point(const BigInt& x, const BigInt& y) const {
  CurvePoint pt = CurvePoint::affine(element(x), element(y));
  require_on_curve(pt);
  return pt;
}

void Curve::require_on_curve(const CurvePoint& pt) const {
  if (!contains(pt)) throw Error(ErrorKind::NotOnCurve, to_string(pt) + " is not on the curve");
}

CurvePoint Curve::neg(const CurvePoint& pt) const {
  require_on_curve(pt);
  if (pt.is_infinity()) return pt;
  return CurvePoint::affine(pt.x(), -pt.y());
}

CurvePoint Curve::add_unchecked(const CurvePoint& lhs, const CurvePoint& rhs) const {
  if (lhs.is_infinity()) return rhs;
  if (rhs.is_infinity()) return lhs;
  const FieldElement& x1 = lhs.x();
  const FieldElement& y1 = lhs.y();
  const FieldElement& x2 = rhs.x();
  const FieldElement& y2 = rhs.y();

  FieldElement slope = element(0);
  if (x1 == x2) {
    // vertical chord, or tangent at a 2-torsion point
    if ((y1 + y2).is_zero()) return CurvePoint::infinity();
    slope = (element(3) * x1 * x1 + a_) / (element(2) * y1);
  } else {
    slope = (y2 - y1) / (x2 - x1);
  }
  FieldElement x3 = slope * slope - x1 - x2;
  FieldElement y3 = slope * (x1 - x3) - y1;
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint Curve::add(const CurvePoint& lhs, const CurvePoint& rhs) const {
  require_on_curve(lhs);
  require_on_curve(rhs);
  return add_unchecked(lhs, rhs);
}

CurvePoint Curve::dbl(const CurvePoint& pt) const { return add(pt, pt); }

CurvePoint Curve::mul(const BigInt& m, const CurvePoint& pt) const {
  require_on_curve(pt);
  if (m < 0) throw Error(ErrorKind::InvalidInput, "scalar multiplier must be non-negative");
  CurvePoint acc = CurvePoint::infinity();
  const std::size_t bits = bit_length(m);
  for (std::size_t i = bits; i-- > 0;) {
    acc = add_unchecked(acc, acc);
    if (mpz_tstbit(m.get_mpz_t(), i) != 0) acc = add_unchecked(acc, pt);
  }
  return acc;
}

bool Curve::is_supersingular_shape() const {
  return a_.is_zero() && b_.is_one() && mod(modulus(), 3) == 2;
}

CurvePoint Curve::supersingular_point_from_y(const FieldElement& y) const {
  if (!is_supersingular_shape()) {
    throw Error(ErrorKind::UnsupportedCurve, "point sampling needs y^2 = x^3 + 1 with p = 2 (mod 3)");
  }
  FieldElement x = cube_root(y * y - element(1));
  return CurvePoint::affine(std::move(x), y);
}

CurvePoint Curve::random_point_supersingular(Rng& rng) const {
  if (!is_supersingular_shape()) {
    throw Error(ErrorKind::UnsupportedCurve, "point sampling needs y^2 = x^3 + 1 with p = 2 (mod 3)");
  }
  return supersingular_point_from_y(element(rand_below(modulus(), rng)));
}

std::vector<CurvePoint> Curve::enumerate_points(std::uint64_t bound) const {
  if (modulus() > bound) {
    throw Error(ErrorKind::TooLarge, "cannot enumerate F_" + to_string(modulus()) + " (bound " +
                                         std::to_string(bound) + ")");
  }
  const std::uint64_t p = modulus().get_ui();
  const std::uint64_t a = a_.value().get_ui();
  const std::uint64_t b = b_.value().get_ui();

  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> roots;
  for (std::uint64_t y = 0; y < p; ++y) roots[y * y % p].push_back(y);

  std::vector<CurvePoint> out{CurvePoint::infinity()};
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs = ((x * x % p) * x % p + a * x % p + b) % p;
    auto it = roots.find(rhs);
    if (it == roots.end()) continue;
    for (std::uint64_t y : it->second) out.push_back(CurvePoint::affine(element(BigInt(x)), element(BigInt(y))));
  }
  return out;
}

}  // namespace ecag
