#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubiclines/error.hpp"
#include "cubiclines/field.hpp"

namespace cubiclines {

// Ordered list of variable names. Polynomials from different contexts never
// mix silently; chart coordinates and ambient coordinates stay apart.
class VarContext {
 public:
  VarContext();
  explicit VarContext(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // Context of the variables not listed in `drop` (order preserved).
  VarContext without(const std::vector<std::size_t>& drop) const;

  bool operator==(const VarContext& o) const;
  bool operator!=(const VarContext& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

enum class MonomialOrder : std::uint8_t { Lex, GrevLex };

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}
  static Monomial one(std::size_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
  }
  static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t e = 1);

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t exp(std::size_t i) const { return e_[i]; }
  std::uint32_t degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& m) const;
  Monomial divided_by(const Monomial& d) const;
  static Monomial lcm(const Monomial& x, const Monomial& y);
  bool coprime_with(const Monomial& o) const;

  // Bitmask of variables with positive exponent (contexts stay below 32 vars).
  std::uint32_t support_mask() const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  std::vector<std::uint32_t> e_;
};

// Positive when x > y in the given order.
int mono_cmp(const Monomial& x, const Monomial& y, MonomialOrder order);

struct Term {
  Monomial mono;
  FieldElement coeff;
};

// Sparse multivariate polynomial: terms strictly decreasing in the active
// order, no zero coefficients, zero polynomial is the empty list.
class MPoly {
 public:
  MPoly() = default;
  static MPoly zero(const VarContext& ctx, MonomialOrder order);
  static MPoly constant(const VarContext& ctx, MonomialOrder order,
                        FieldElement c);
  static MPoly variable(const VarContext& ctx, std::size_t i,
                        MonomialOrder order);
  // Normalizes: sorts, combines equal monomials, drops zeros.
  static MPoly from_terms(const VarContext& ctx, MonomialOrder order,
                          std::vector<Term> terms);
  // Trusted fast path: terms already strictly decreasing with nonzero
  // coefficients.
  static MPoly from_sorted_terms(const VarContext& ctx, MonomialOrder order,
                                 std::vector<Term> terms);

  const VarContext& context() const { return ctx_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const FieldElement& leading_coeff() const { return leading_term().coeff; }
  // Polynomial minus its leading term.
  MPoly tail() const;
  MPoly monic() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly pow(std::uint32_t e) const;
  MPoly scaled(const FieldElement& c) const;
  MPoly times_term(const FieldElement& c, const Monomial& m) const;

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly derivative(std::size_t var) const;

  // Exact composition f(images...); one image per variable, all images in a
  // common target context.
  MPoly substitute(const std::vector<MPoly>& images) const;

  // Coefficient of the monomial prod in_vars[k]^degs[k], as a polynomial in
  // the remaining variables.
  MPoly coefficient_of(const std::vector<std::size_t>& in_vars,
                       const std::vector<std::uint32_t>& degs) const;

  FieldElement evaluate(const std::vector<FieldElement>& point) const;

  // Constant value of a constant polynomial.
  FieldElement constant_value() const;

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  std::uint32_t support_mask() const;

  MPoly with_order(MonomialOrder order) const;

  FieldTag coefficient_tag() const;

  std::string to_string() const;

 private:
  VarContext ctx_;
  MonomialOrder order_ = MonomialOrder::GrevLex;
  std::vector<Term> terms_;

  void require_compatible(const MPoly& o) const;
};

// f + c * x^m * g, all in one merge pass.
MPoly axpy(const MPoly& f, const FieldElement& c, const Monomial& m,
           const MPoly& g);

// Grammar: integers, rationals a/b, w, identifiers, + - * ^, parentheses.
// No implicit multiplication. `allow` = Q rejects w.
MPoly parse_poly(std::string_view text, const VarContext& ctx,
                 MonomialOrder order = MonomialOrder::GrevLex,
                 FieldTag allow = FieldTag::QOmega);

FieldElement parse_field_element(std::string_view text,
                                 FieldTag allow = FieldTag::QOmega);

}  // namespace cubiclines
