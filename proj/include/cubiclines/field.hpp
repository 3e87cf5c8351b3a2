#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cubiclines/error.hpp"

namespace cubiclines {

using BigInt = mpz_class;

// Reduced fraction with positive denominator; GMP keeps the invariants.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
std::string rational_to_string(const BigRational& q);

// a + b*omega with omega^2 = -1 - omega. The norm a^2 - ab + b^2 is the
// usual multiplicative norm of Z[omega].
struct EisensteinInt {
  BigInt a;
  BigInt b;

  EisensteinInt() : a(0), b(0) {}
  EisensteinInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
  EisensteinInt(long a_, long b_) : a(a_), b(b_) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const EisensteinInt& o) const { return a == o.a && b == o.b; }
  bool operator!=(const EisensteinInt& o) const { return !(*this == o); }

  EisensteinInt operator+(const EisensteinInt& o) const;
  EisensteinInt operator-(const EisensteinInt& o) const;
  EisensteinInt operator*(const EisensteinInt& o) const;
  EisensteinInt operator-() const { return EisensteinInt(-a, -b); }

  std::string to_string() const;
};

BigInt eis_norm(const EisensteinInt& e);

// The six units {1, -1, w, -w, 1+w, -1-w}.
const std::vector<EisensteinInt>& eis_units();

bool eis_is_unit(const EisensteinInt& e);

// Euclidean division: e = q*d + r with norm(r) < norm(d).
struct EisDivRem {
  EisensteinInt quot;
  EisensteinInt rem;
};
EisDivRem eis_divrem(const EisensteinInt& e, const EisensteinInt& d);

bool eis_divides(const EisensteinInt& d, const EisensteinInt& e);

EisensteinInt eis_gcd(EisensteinInt x, EisensteinInt y);

// Deterministic representative of {e*u : u unit}: smallest |a|+|b|,
// ties broken by larger a, then larger b.
EisensteinInt eis_canonical_associate(const EisensteinInt& e);

// One representative per associate class of divisors of e, canonically
// sorted. Throws on e = 0; throws ResourceLimitError when norm(e) exceeds
// the 64-bit trial-division range.
std::vector<EisensteinInt> eis_divisors(const EisensteinInt& e);

enum class FieldTag : std::uint8_t { Q, QOmega };

// Join of base fields: Q unless either operand lives in Q(omega).
inline FieldTag join(FieldTag x, FieldTag y) {
  return (x == FieldTag::QOmega || y == FieldTag::QOmega) ? FieldTag::QOmega
                                                          : FieldTag::Q;
}

// Element a + b*omega of Q or Q(omega). Values compare by (a, b) alone;
// the tag tracks which base field the computation lives in.
class FieldElement {
 public:
  FieldElement() : tag_(FieldTag::Q) {}
  explicit FieldElement(long n) : a_(n), tag_(FieldTag::Q) {}
  explicit FieldElement(BigRational a, FieldTag tag = FieldTag::Q)
      : a_(std::move(a)), tag_(tag) {}
  FieldElement(BigRational a, BigRational b, FieldTag tag);

  static FieldElement zero(FieldTag tag = FieldTag::Q) {
    return FieldElement(BigRational(0), tag);
  }
  static FieldElement one(FieldTag tag = FieldTag::Q) {
    return FieldElement(BigRational(1), tag);
  }
  static FieldElement omega();
  static FieldElement from_eisenstein(const EisensteinInt& e);

  const BigRational& rational_part() const { return a_; }
  const BigRational& omega_part() const { return b_; }
  FieldTag tag() const { return tag_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  // Conjugate a + b*conj(omega) with conj(omega) = -1 - omega.
  FieldElement conjugate() const;

  // a^2 - ab + b^2, a nonnegative rational.
  BigRational norm() const;

  FieldElement inverse() const;
  FieldElement operator/(const FieldElement& o) const {
    return *this * o.inverse();
  }

  bool operator==(const FieldElement& o) const {
    return a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  BigRational a_;
  BigRational b_;
  FieldTag tag_;
};

// Total order used for deterministic output: lexicographic on
// (a.num, a.den, b.num, b.den).
bool canonical_less(const FieldElement& x, const FieldElement& y);

}  // namespace cubiclines
