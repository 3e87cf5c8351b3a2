#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubiclines/poly.hpp"

namespace cubiclines {

// Budgets are generous defaults; exceeding one is a hard error, never a
// silent truncation.
struct GBConfig {
  std::size_t max_pairs = 200000;
  std::size_t max_basis = 4000;
};

struct Ideal {
  VarContext ctx;
  MonomialOrder order;
  std::vector<MPoly> generators;

  Ideal(VarContext c, MonomialOrder o, std::vector<MPoly> gens);
  Ideal with_order(MonomialOrder o) const;
};

// Reduced Groebner basis: monic, inter-reduced, unique for the order.
class GroebnerBasis {
 public:
  GroebnerBasis(VarContext ctx, MonomialOrder order, std::vector<MPoly> elements)
      : ctx_(std::move(ctx)), order_(order), elements_(std::move(elements)) {}

  const VarContext& context() const { return ctx_; }
  MonomialOrder order() const { return order_; }
  const std::vector<MPoly>& elements() const { return elements_; }

  bool is_unit_ideal() const;

 private:
  VarContext ctx_;
  MonomialOrder order_;
  std::vector<MPoly> elements_;
};

GroebnerBasis groebner(const Ideal& ideal, const GBConfig& cfg = {});

// Remainder of multivariate division; zero iff f lies in the ideal.
MPoly normal_form(const MPoly& f, const GroebnerBasis& basis);
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis);

MPoly s_polynomial(const MPoly& f, const MPoly& g);

// Krull dimension of the affine quotient, from leading monomials; -1 for
// the unit ideal.
int dimension(const GroebnerBasis& basis);

// Every variable carries a pure-power leading term.
bool is_zero_dimensional(const GroebnerBasis& basis);

// Vector-space dimension of the quotient (number of standard monomials).
std::size_t staircase_size(const GroebnerBasis& basis);

struct UnivariateRoots {
  // (root, multiplicity), canonically ordered.
  std::vector<std::pair<FieldElement, int>> roots;
  // Monic cofactor without roots in the search field, when one remains.
  std::optional<MPoly> unresolved;
};

// Complete list of roots of a univariate polynomial in the search field,
// via Eisenstein (or integer) divisor candidates on the primitive part.
UnivariateRoots univariate_roots(const MPoly& p, FieldTag search);

struct SolutionSet {
  std::vector<std::vector<FieldElement>> points;
  std::vector<MPoly> unresolved;
};

// All solutions with coordinates in the search field, by lex
// back-substitution. Throws NotZeroDimensionalError on positive-dimensional
// input and TriangularityError after the random-change retry budget.
SolutionSet solve_zero_dim(const Ideal& ideal, FieldTag search = FieldTag::QOmega,
                           const GBConfig& cfg = {});

}  // namespace cubiclines
