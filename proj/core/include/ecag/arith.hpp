#pragma once

// Arbitrary-precision integers, prime-field elements and the small set of
// number-theoretic routines the curve construction needs.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ecag/error.hpp"

namespace ecag {

using BigInt = mpz_class;

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& v);
std::size_t bit_length(const BigInt& v);

/// Non-negative residue of v modulo m (m > 0).
BigInt mod(const BigInt& v, const BigInt& m);

/// The single seeded randomness source threaded through every randomized
/// routine. mt19937_64 has a standard-mandated output sequence, so a seed
/// reproduces the same draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t next_u64() {
    ++draws_;
    return engine_();
  }
  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t draws() const noexcept { return draws_; }

 private:
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 engine_;
};

/// Uniform in [0, bound) by rejection sampling on bit_length(bound - 1) bits.
BigInt rand_below(const BigInt& bound, Rng& rng);

inline constexpr unsigned kDefaultMillerRabinRounds = 64;

/// Miller-Rabin with `rounds` random bases. A false answer is certain; a
/// true answer is wrong with probability at most 4^-rounds.
bool miller_rabin(const BigInt& n, unsigned rounds, Rng& rng);

/// Primality check with a fixed internal seed, for contexts with no rng at hand.
bool is_probable_prime(const BigInt& n, unsigned rounds = kDefaultMillerRabinRounds);

/// Unique x in [0, m1*m2) with x = r1 (mod m1) and x = r2 (mod m2).
BigInt crt2(const BigInt& r1, const BigInt& m1, const BigInt& r2, const BigInt& m2);

/// Context for arithmetic modulo a prime. Shared by every element of the field.
class PrimeField {
 public:
  /// Throws InvalidField if p is not a probable prime.
  explicit PrimeField(BigInt p);

  const BigInt& modulus() const noexcept { return p_; }
  bool fits_u64() const noexcept { return fits_u64_; }

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  BigInt p_;
  bool fits_u64_;
};

using FieldPtr = std::shared_ptr<const PrimeField>;

FieldPtr make_field(const BigInt& p);

class FieldElement {
 public:
  FieldElement(FieldPtr field, const BigInt& value);
  FieldElement(FieldPtr field, long value);

  const BigInt& value() const noexcept { return value_; }
  const FieldPtr& field() const noexcept { return field_; }
  const BigInt& modulus() const noexcept { return field_->modulus(); }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  /// Throws DivisionByZero on zero.
  FieldElement inv() const;
  /// Square-and-multiply; negative exponents go through inv().
  FieldElement pow(const BigInt& e) const;

  /// Compares values; elements of different fields compare unequal.
  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

 private:
  void check_same_field(const FieldElement& rhs) const;

  FieldPtr field_;
  BigInt value_;
};

std::string to_string(const FieldElement& v);

/// z with z^3 = c, computed as c^(3^-1 mod p-1). Requires p = 2 (mod 3).
FieldElement cube_root(const FieldElement& c);

}  // namespace ecag
