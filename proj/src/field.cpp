#include "cubiclines/field.hpp"

#include <algorithm>

namespace cubiclines {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

EisensteinInt EisensteinInt::operator+(const EisensteinInt& o) const {
  return EisensteinInt(a + o.a, b + o.b);
}

EisensteinInt EisensteinInt::operator-(const EisensteinInt& o) const {
  return EisensteinInt(a - o.a, b - o.b);
}

EisensteinInt EisensteinInt::operator*(const EisensteinInt& o) const {
  // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w, using w^2 = -1 - w.
  BigInt bd = b * o.b;
  return EisensteinInt(a * o.a - bd, a * o.b + b * o.a - bd);
}

std::string EisensteinInt::to_string() const {
  if (b == 0) return a.get_str();
  std::string w = (b == 1) ? "w" : (b == -1) ? "-w" : b.get_str() + "*w";
  if (a == 0) return w;
  if (b > 0) {
    return a.get_str() + "+" + (b == 1 ? std::string("w") : b.get_str() + "*w");
  }
  BigInt nb = -b;
  return a.get_str() + "-" + (nb == 1 ? std::string("w") : nb.get_str() + "*w");
}

BigInt eis_norm(const EisensteinInt& e) { return e.a * e.a - e.a * e.b + e.b * e.b; }

const std::vector<EisensteinInt>& eis_units() {
  static const std::vector<EisensteinInt> units = {
      EisensteinInt(1, 0),  EisensteinInt(-1, 0), EisensteinInt(0, 1),
      EisensteinInt(0, -1), EisensteinInt(1, 1),  EisensteinInt(-1, -1)};
  return units;
}

bool eis_is_unit(const EisensteinInt& e) { return eis_norm(e) == 1; }

namespace {

// Nearest integer to v/n for n > 0 (ties round up).
BigInt round_div(const BigInt& v, const BigInt& n) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), BigInt(2 * v + n).get_mpz_t(), BigInt(2 * n).get_mpz_t());
  return q;
}

}  // namespace

EisDivRem eis_divrem(const EisensteinInt& e, const EisensteinInt& d) {
  if (d.is_zero()) throw DivisionByZeroError("Eisenstein division by zero");
  BigInt n = eis_norm(d);
  // e * conj(d) with conj(a + b w) = (a - b) - b w.
  EisensteinInt num = e * EisensteinInt(d.a - d.b, -d.b);
  EisensteinInt q(round_div(num.a, n), round_div(num.b, n));
  EisensteinInt r = e - q * d;
  return {q, r};
}

bool eis_divides(const EisensteinInt& d, const EisensteinInt& e) {
  return eis_divrem(e, d).rem.is_zero();
}

EisensteinInt eis_gcd(EisensteinInt x, EisensteinInt y) {
  while (!y.is_zero()) {
    EisensteinInt r = eis_divrem(x, y).rem;
    x = y;
    y = r;
  }
  return eis_canonical_associate(x);
}

EisensteinInt eis_canonical_associate(const EisensteinInt& e) {
  if (e.is_zero()) return e;
  EisensteinInt best = e;
  bool first = true;
  for (const EisensteinInt& u : eis_units()) {
    EisensteinInt c = e * u;
    if (first) {
      best = c;
      first = false;
      continue;
    }
    BigInt cs = abs(c.a) + abs(c.b);
    BigInt bs = abs(best.a) + abs(best.b);
    if (cs < bs || (cs == bs && (c.a > best.a || (c.a == best.a && c.b > best.b)))) {
      best = c;
    }
  }
  return best;
}

std::vector<EisensteinInt> eis_divisors(const EisensteinInt& e) {
  if (e.is_zero()) throw InvalidInputError("eis_divisors of zero");
  BigInt norm = eis_norm(e);
  // Enumeration visits ~16/3 * norm lattice points; cap where that stays fast.
  if (!norm.fits_ulong_p() || norm.get_ui() > 100000000UL) {
    throw ResourceLimitError("Eisenstein norm beyond trial-division range: " +
                             norm.get_str());
  }
  const long n = static_cast<long>(norm.get_ui());
  // a^2 - ab + b^2 <= n forces |a|, |b| <= 2*sqrt(n/3).
  long bound = 1;
  while (3 * bound * bound < 4 * n) ++bound;
  std::vector<EisensteinInt> out;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      if (a == 0 && b == 0) continue;
      long nd = a * a - a * b + b * b;
      if (nd > n || n % nd != 0) continue;
      EisensteinInt d(a, b);
      if (!eis_divides(d, e)) continue;
      EisensteinInt c = eis_canonical_associate(d);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), [](const EisensteinInt& x, const EisensteinInt& y) {
    BigInt nx = eis_norm(x), ny = eis_norm(y);
    if (nx != ny) return nx < ny;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return out;
}

FieldElement::FieldElement(BigRational a, BigRational b, FieldTag tag)
    : a_(std::move(a)), b_(std::move(b)), tag_(tag) {
  if (tag_ == FieldTag::Q && b_ != 0) {
    throw InvalidInputError("omega component in a Q-tagged field element");
  }
}

FieldElement FieldElement::omega() {
  return FieldElement(BigRational(0), BigRational(1), FieldTag::QOmega);
}

FieldElement FieldElement::from_eisenstein(const EisensteinInt& e) {
  return FieldElement(BigRational(e.a), BigRational(e.b), FieldTag::QOmega);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return FieldElement(a_ + o.a_, b_ + o.b_, join(tag_, o.tag_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return FieldElement(a_ - o.a_, b_ - o.b_, join(tag_, o.tag_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  BigRational bd = b_ * o.b_;
  return FieldElement(a_ * o.a_ - bd, a_ * o.b_ + b_ * o.a_ - bd,
                      join(tag_, o.tag_));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(-a_, -b_, tag_);
}

FieldElement FieldElement::conjugate() const {
  return FieldElement(a_ - b_, -b_, tag_);
}

BigRational FieldElement::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero field element");
  BigRational n = norm();
  return FieldElement((a_ - b_) / n, -b_ / n, tag_);
}

std::string FieldElement::to_string() const {
  if (b_ == 0) return rational_to_string(a_);
  auto wpart = [](const BigRational& c) {
    return c == 1 ? std::string("w") : rational_to_string(c) + "*w";
  };
  if (a_ == 0) return b_ < 0 ? "-" + wpart(-b_) : wpart(b_);
  if (b_ < 0) return rational_to_string(a_) + "-" + wpart(-b_);
  return rational_to_string(a_) + "+" + wpart(b_);
}

bool canonical_less(const FieldElement& x, const FieldElement& y) {
  int c = cmp(x.rational_part().get_num(), y.rational_part().get_num());
  if (c != 0) return c < 0;
  c = cmp(x.rational_part().get_den(), y.rational_part().get_den());
  if (c != 0) return c < 0;
  c = cmp(x.omega_part().get_num(), y.omega_part().get_num());
  if (c != 0) return c < 0;
  return cmp(x.omega_part().get_den(), y.omega_part().get_den()) < 0;
}

}  // namespace cubiclines
