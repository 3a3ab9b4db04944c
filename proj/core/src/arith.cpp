#include "ecag/arith.hpp"

#include <array>
#include <cctype>
#include <limits>

namespace ecag {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) {
    throw Error(ErrorKind::InvalidInput, "empty integer literal");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw Error(ErrorKind::InvalidInput, "not a decimal integer: '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

BigInt mod(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt rand_below(const BigInt& bound, Rng& rng) {
  if (bound < 1) {
    throw Error(ErrorKind::InvalidInput, "rand_below requires bound >= 1");
  }
  const std::size_t bits = bit_length(bound - 1);
  if (bits == 0) return 0;
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  for (;;) {
    BigInt candidate = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng.next_u64();
      if (w == 0 && top_bits < 64) {
        word &= (std::uint64_t{1} << top_bits) - 1;
      }
      candidate <<= 64;
      BigInt part;
      mpz_import(part.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      candidate += part;
    }
    if (candidate < bound) return candidate;
  }
}

namespace {

constexpr std::array<unsigned, 15> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

BigInt powm(const BigInt& base, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

bool miller_rabin(const BigInt& n, unsigned rounds, Rng& rng) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "miller_rabin requires n >= 2, got " + to_string(n));
  if (rounds < 1) throw Error(ErrorKind::InvalidInput, "miller_rabin requires rounds >= 1");
  for (unsigned sp : kSmallPrimes) {
    if (n == sp) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), sp) != 0) return false;
  }

  // n - 1 = d * 2^s with d odd
  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t()) != 0) {
    d >>= 1;
    ++s;
  }

  for (unsigned round = 0; round < rounds; ++round) {
    const BigInt base = rand_below(n - 3, rng) + 2;  // uniform in [2, n-2]
    BigInt x = powm(base, d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_probable_prime(const BigInt& n, unsigned rounds) {
  if (n < 2) return false;
  Rng rng(0x5eed'0f'9e37'79b9ULL);
  return miller_rabin(n, rounds, rng);
}

BigInt crt2(const BigInt& r1, const BigInt& m1, const BigInt& r2, const BigInt& m2) {
  if (m1 < 1 || m2 < 1) throw Error(ErrorKind::InvalidInput, "crt2 moduli must be positive");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  if (g != 1) {
    throw Error(ErrorKind::NotCoprime, "moduli " + to_string(m1) + " and " + to_string(m2) + " share a factor");
  }
  BigInt inv = 0;
  if (m2 != 1) mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  const BigInt a = mod(r1, m1);
  const BigInt t = mod((mod(r2, m2) - a) * inv, m2);
  return a + m1 * t;
}

PrimeField::PrimeField(BigInt p) : p_(std::move(p)) {
  if (!is_probable_prime(p_)) {
    throw Error(ErrorKind::InvalidField, "modulus " + to_string(p_) + " is not prime");
  }
  fits_u64_ = bit_length(p_) <= 62;
}

FieldPtr make_field(const BigInt& p) { return std::make_shared<const PrimeField>(p); }

FieldElement::FieldElement(FieldPtr field, const BigInt& value)
    : field_(std::move(field)), value_(mod(value, field_->modulus())) {}

FieldElement::FieldElement(FieldPtr field, long value) : FieldElement(std::move(field), BigInt(value)) {}

void FieldElement::check_same_field(const FieldElement& rhs) const {
  if (field_ != rhs.field_ && !(*field_ == *rhs.field_)) {
    throw Error(ErrorKind::FieldMismatch,
                "operands live in F_" + to_string(modulus()) + " and F_" + to_string(rhs.modulus()));
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same_field(rhs);
  BigInt r = value_ + rhs.value_;
  if (r >= modulus()) r -= modulus();
  return FieldElement(field_, r);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same_field(rhs);
  BigInt r = value_ - rhs.value_;
  if (r < 0) r += modulus();
  return FieldElement(field_, r);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same_field(rhs);
  return FieldElement(field_, value_ * rhs.value_);
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inv(); }

FieldElement FieldElement::operator-() const { return FieldElement(field_, -value_); }

FieldElement FieldElement::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_" + to_string(modulus()));
  BigInt r;
  mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), modulus().get_mpz_t());
  return FieldElement(field_, r);
}

FieldElement FieldElement::pow(const BigInt& e) const {
  if (e < 0) return inv().pow(-e);
  return FieldElement(field_, powm(value_, e, modulus()));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  return value_ == rhs.value_ && (field_ == rhs.field_ || *field_ == *rhs.field_);
}

std::string to_string(const FieldElement& v) { return to_string(v.value()); }

FieldElement cube_root(const FieldElement& c) {
  const BigInt& p = c.modulus();
  if (mod(p, 3) != 2) {
    throw Error(ErrorKind::UnsupportedModulus, "cube_root needs p = 2 (mod 3), got p = " + to_string(p));
  }
  BigInt e;
  const BigInt p_minus_1 = p - 1;
  mpz_invert(e.get_mpz_t(), BigInt(3).get_mpz_t(), p_minus_1.get_mpz_t());
  return c.pow(e);
}

}  // namespace ecag
