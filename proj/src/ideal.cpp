#include "cubiclines/ideal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cubiclines/linalg.hpp"

namespace cubiclines {

Ideal::Ideal(VarContext c, MonomialOrder o, std::vector<MPoly> gens)
    : ctx(std::move(c)), order(o), generators(std::move(gens)) {
  for (auto& g : generators) {
    if (g.is_zero()) throw InvalidInputError("ideal generators must be nonzero");
    if (g.context() != ctx) {
      throw ContextMismatchError("ideal generator from a foreign context");
    }
    g = g.with_order(order);
  }
}

Ideal Ideal::with_order(MonomialOrder o) const {
  std::vector<MPoly> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.with_order(o));
  return Ideal(ctx, o, std::move(gens));
}

bool GroebnerBasis::is_unit_ideal() const {
  return elements_.size() == 1 && !elements_[0].is_zero() &&
         elements_[0].leading_monomial().is_one();
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis) {
  std::vector<Term> out;
  MPoly cur = f;
  while (!cur.is_zero()) {
    const Monomial& lm = cur.leading_monomial();
    const MPoly* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lm)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      out.push_back(cur.leading_term());
      cur = cur.tail();
    } else {
      FieldElement c = cur.leading_coeff() / reducer->leading_coeff();
      Monomial m = lm.divided_by(reducer->leading_monomial());
      cur = axpy(cur, -c, m, *reducer);
    }
  }
  return MPoly::from_sorted_terms(f.context(), f.order(), std::move(out));
}

namespace {

// Clear denominators and divide by the Eisenstein content; the leading
// coefficient becomes its own canonical associate. Keeps coefficient sizes
// tame across long reduction chains.
MPoly make_primitive(const MPoly& f) {
  if (f.is_zero()) return f;
  BigInt lcm_den(1);
  for (const auto& t : f.terms()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            t.coeff.rational_part().get_den().get_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            t.coeff.omega_part().get_den().get_mpz_t());
  }
  EisensteinInt content(0, 0);
  for (const auto& t : f.terms()) {
    BigRational a = t.coeff.rational_part() * lcm_den;
    BigRational b = t.coeff.omega_part() * lcm_den;
    content = eis_gcd(content, EisensteinInt(a.get_num(), b.get_num()));
  }
  FieldElement scale = FieldElement(BigRational(lcm_den)) /
                       FieldElement::from_eisenstein(content);
  MPoly out = f.scaled(scale);
  // Deterministic unit: leading coefficient equal to its canonical associate.
  const FieldElement& lead = out.leading_coeff();
  EisensteinInt lead_eis(lead.rational_part().get_num(),
                         lead.omega_part().get_num());
  EisensteinInt canon = eis_canonical_associate(lead_eis);
  if (!(canon == lead_eis)) {
    out = out.scaled(FieldElement::from_eisenstein(canon) /
                     FieldElement::from_eisenstein(lead_eis));
  }
  return out;
}

// Reduce only the leading term, fraction-free: with a primitive basis the
// coefficients stay in Z[w] and GMP works on plain integers instead of
// normalized rationals. Content is stripped periodically to bound growth.
MPoly top_normal_form(MPoly cur, const std::vector<MPoly>& basis) {
  int steps = 0;
  while (!cur.is_zero()) {
    const Monomial& lm = cur.leading_monomial();
    const MPoly* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lm)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) return cur;
    Monomial m = lm.divided_by(reducer->leading_monomial());
    cur = axpy(cur.scaled(reducer->leading_coeff()), -cur.leading_coeff(), m,
               *reducer);
    if (++steps % 16 == 0 && !cur.is_zero()) cur = make_primitive(cur);
  }
  return cur;
}

// Fraction-free S-polynomial: lc(g) (l / lm(f)) f - lc(f) (l / lm(g)) g.
MPoly s_polynomial_ff(const MPoly& f, const MPoly& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  MPoly a = f.times_term(g.leading_coeff(), l.divided_by(f.leading_monomial()));
  return axpy(a, -f.leading_coeff(), l.divided_by(g.leading_monomial()), g);
}

}  // namespace

MPoly normal_form(const MPoly& f, const GroebnerBasis& basis) {
  if (f.context() != basis.context() || f.order() != basis.order()) {
    throw ContextMismatchError("normal form across contexts or orders");
  }
  return normal_form(f, basis.elements());
}

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  MPoly a = f.times_term(f.leading_coeff().inverse(),
                         l.divided_by(f.leading_monomial()));
  MPoly b = g.times_term(g.leading_coeff().inverse(),
                         l.divided_by(g.leading_monomial()));
  return a - b;
}

namespace {

struct Pair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const Pair& a, const Pair& b) const {
    int c = mono_cmp(a.lcm, b.lcm, order);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, const GBConfig& cfg) {
  const MonomialOrder order = ideal.order;
  std::vector<MPoly> basis;
  std::set<Pair, PairLess> pending{PairLess{order}};
  std::set<std::pair<std::size_t, std::size_t>> pending_idx;

  auto enqueue = [&](std::size_t i, std::size_t j) {
    const Monomial& mi = basis[i].leading_monomial();
    const Monomial& mj = basis[j].leading_monomial();
    // Buchberger's first criterion: coprime leading monomials reduce to zero.
    if (mi.coprime_with(mj)) return;
    pending.insert({Monomial::lcm(mi, mj), i, j});
    pending_idx.insert({i, j});
  };

  auto insert = [&](const MPoly& h) {
    std::size_t idx = basis.size();
    basis.push_back(make_primitive(h));
    if (basis.size() > cfg.max_basis) {
      throw BudgetExceededError("Groebner basis size budget exceeded");
    }
    for (std::size_t i = 0; i < idx; ++i) enqueue(i, idx);
  };

  for (const auto& g : ideal.generators) {
    MPoly h = top_normal_form(g, basis);
    if (!h.is_zero()) insert(h);
  }

  std::size_t processed = 0;
  while (!pending.empty()) {
    Pair p = *pending.begin();
    pending.erase(pending.begin());
    pending_idx.erase({p.i, p.j});
    if (++processed > cfg.max_pairs) {
      throw BudgetExceededError("Groebner pair budget exceeded");
    }
    // Buchberger's second (chain) criterion.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading_monomial().divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (pending_idx.count(key(p.i, k)) == 0 &&
          pending_idx.count(key(p.j, k)) == 0) {
        skip = true;
      }
    }
    if (skip) continue;
    MPoly h = top_normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (!h.is_zero()) insert(h);
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::sort(basis.begin(), basis.end(), [order](const MPoly& a, const MPoly& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  std::vector<MPoly> minimal;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (kept.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }
  // Full reduction of each element against the others yields the unique
  // reduced basis: leading monomials are pairwise non-divisible, so one
  // pass settles every tail.
  basis.clear();
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    basis.push_back(normal_form(minimal[i], others).monic());
  }

  GroebnerBasis result(ideal.ctx, order, std::move(basis));
  for (const auto& g : ideal.generators) {
    if (!normal_form(g, result).is_zero()) {
      throw Error("internal error: generator escapes its own Groebner basis");
    }
  }
  return result;
}

int dimension(const GroebnerBasis& basis) {
  const std::size_t n = basis.context().size();
  std::vector<std::uint32_t> lm_masks;
  for (const auto& g : basis.elements()) {
    if (g.leading_monomial().is_one()) return -1;  // unit ideal
    lm_masks.push_back(g.leading_monomial().support_mask());
  }
  if (n > 20) throw ResourceLimitError("dimension: too many variables");
  int best = -1;
  // S independent iff no leading monomial is supported inside S.
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool independent = true;
    for (std::uint32_t m : lm_masks) {
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

bool is_zero_dimensional(const GroebnerBasis& basis) {
  const std::size_t n = basis.context().size();
  std::vector<bool> covered(n, false);
  for (const auto& g : basis.elements()) {
    if (g.leading_monomial().is_one()) return true;  // empty variety
    std::uint32_t mask = g.leading_monomial().support_mask();
    if (mask != 0 && (mask & (mask - 1)) == 0) {
      covered[static_cast<std::size_t>(__builtin_ctz(mask))] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::size_t staircase_size(const GroebnerBasis& basis) {
  if (basis.is_unit_ideal()) return 0;
  if (!is_zero_dimensional(basis)) {
    throw NotZeroDimensionalError("staircase of a positive-dimensional ideal");
  }
  const std::size_t n = basis.context().size();
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : basis.elements()) {
    const Monomial& lm = g.leading_monomial();
    std::uint32_t mask = lm.support_mask();
    if (mask != 0 && (mask & (mask - 1)) == 0) {
      std::size_t v = static_cast<std::size_t>(__builtin_ctz(mask));
      std::uint32_t d = lm.exp(v);
      if (bound[v] == 0 || d < bound[v]) bound[v] = d;
    }
  }
  std::vector<std::uint32_t> exps(n, 0);
  std::size_t count = 0;
  while (true) {
    Monomial m{std::vector<std::uint32_t>(exps)};
    bool standard = true;
    for (const auto& g : basis.elements()) {
      if (g.leading_monomial().divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
    // Odometer over the box of per-variable bounds.
    std::size_t v = 0;
    while (v < n) {
      if (++exps[v] < bound[v]) break;
      exps[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return count;
}

// ----------------------------------------------------------------------------
// Univariate machinery (dense, over the field)

namespace {

using UniPoly = std::vector<FieldElement>;  // coeffs[i] is the x^i coefficient

void uni_normalize(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_monic(UniPoly p) {
  uni_normalize(p);
  if (p.empty()) return p;
  FieldElement inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

FieldElement uni_eval(const UniPoly& p, const FieldElement& x) {
  FieldElement acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

UniPoly uni_derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * FieldElement(static_cast<long>(i)));
  }
  uni_normalize(d);
  return d;
}

// Remainder of p modulo d (d nonzero, normalized).
UniPoly uni_rem(UniPoly p, const UniPoly& d) {
  uni_normalize(p);
  FieldElement lead_inv = d.back().inverse();
  while (p.size() >= d.size()) {
    FieldElement f = p.back() * lead_inv;
    std::size_t shift = p.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) p[shift + i] -= f * d[i];
    uni_normalize(p);
  }
  return p;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_normalize(a);
  uni_normalize(b);
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return uni_monic(std::move(a));
}

// Exact division of p by (x - r); remainder must vanish.
UniPoly uni_divide_linear_root(const UniPoly& p, const FieldElement& r) {
  UniPoly q(p.size() - 1);
  FieldElement carry(0);
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  if (!(carry * r + p[0]).is_zero()) {
    throw Error("internal error: non-root passed to linear division");
  }
  return q;
}

// Exact division q = p / d (remainder must vanish).
UniPoly uni_divide_exact(UniPoly p, const UniPoly& d) {
  uni_normalize(p);
  if (p.empty()) return p;
  UniPoly q(p.size() - d.size() + 1, FieldElement(0));
  FieldElement lead_inv = d.back().inverse();
  while (p.size() >= d.size()) {
    FieldElement f = p.back() * lead_inv;
    std::size_t shift = p.size() - d.size();
    q[shift] = f;
    for (std::size_t i = 0; i < d.size(); ++i) p[shift + i] -= f * d[i];
    uni_normalize(p);
  }
  if (!p.empty()) throw Error("internal error: inexact univariate division");
  return q;
}

std::vector<BigInt> integer_divisors(const BigInt& n_in) {
  BigInt n = abs(n_in);
  if (!n.fits_ulong_p() || n.get_ui() > 1000000000000UL) {
    throw ResourceLimitError("integer beyond trial-division range: " + n.get_str());
  }
  unsigned long v = n.get_ui();
  std::vector<BigInt> out;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(BigInt(static_cast<long>(d)));
      if (d != v / d) out.push_back(BigInt(static_cast<long>(v / d)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Candidate roots in the search field: unit times a divisor of the constant
// term over a divisor of the leading term, on the primitive integral part.
std::vector<FieldElement> root_candidates(const UniPoly& p, FieldTag search) {
  BigInt lcm_den(1);
  for (const auto& c : p) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            c.rational_part().get_den().get_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            c.omega_part().get_den().get_mpz_t());
  }
  std::vector<EisensteinInt> z;
  z.reserve(p.size());
  for (const auto& c : p) {
    BigRational a = c.rational_part() * lcm_den;
    BigRational b = c.omega_part() * lcm_den;
    z.emplace_back(a.get_num(), b.get_num());
  }
  EisensteinInt content(0, 0);
  for (const auto& c : z) content = eis_gcd(content, c);
  for (auto& c : z) c = eis_divrem(c, content).quot;

  std::vector<FieldElement> candidates;
  auto push = [&candidates](const FieldElement& x) {
    if (std::find(candidates.begin(), candidates.end(), x) == candidates.end()) {
      candidates.push_back(x);
    }
  };
  if (search == FieldTag::QOmega) {
    for (const auto& num : eis_divisors(z.front())) {
      for (const auto& den : eis_divisors(z.back())) {
        FieldElement base = FieldElement::from_eisenstein(num) /
                            FieldElement::from_eisenstein(den);
        for (const auto& u : eis_units()) {
          push(base * FieldElement::from_eisenstein(u));
        }
      }
    }
  } else {
    if (z.front().b != 0 || z.back().b != 0) {
      throw InvalidInputError("rational root search on a Q(w) polynomial");
    }
    for (const auto& num : integer_divisors(z.front().a)) {
      for (const auto& den : integer_divisors(z.back().a)) {
        FieldElement base(make_rational(num, den));
        push(base);
        push(-base);
      }
    }
  }
  return candidates;
}

struct DenseRoots {
  std::vector<std::pair<FieldElement, int>> roots;
  UniPoly unresolved;  // empty when fully split over the search field
};

DenseRoots dense_univariate_roots(UniPoly p, FieldTag search) {
  uni_normalize(p);
  DenseRoots out;
  if (p.size() <= 1) return out;  // constants carry no roots

  // Factor out x^m.
  std::size_t m = 0;
  while (m < p.size() && p[m].is_zero()) ++m;
  if (m > 0) {
    out.roots.emplace_back(FieldElement(0), static_cast<int>(m));
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(m));
  }
  if (p.size() <= 1) {
    return out;
  }

  // Distinct roots of the square-free part, by candidate testing.
  UniPoly sq = uni_divide_exact(p, uni_gcd(p, uni_derivative(p)));
  std::vector<FieldElement> found;
  if (uni_degree(sq) >= 1) {
    for (const auto& cand : root_candidates(sq, search)) {
      if (uni_eval(sq, cand).is_zero()) found.push_back(cand);
    }
  }

  for (const auto& r : found) {
    int mult = 0;
    while (!p.empty() && uni_eval(p, r).is_zero()) {
      p = uni_divide_linear_root(p, r);
      ++mult;
      if (p.size() <= 1) break;
    }
    out.roots.emplace_back(r, mult);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
    return canonical_less(a.first, b.first);
  });
  if (uni_degree(p) >= 1) out.unresolved = uni_monic(std::move(p));
  return out;
}

// The unique variable a univariate polynomial in a multivariate context uses.
std::size_t single_support_var(const MPoly& p) {
  std::uint32_t mask = p.support_mask();
  if (mask == 0) return 0;
  if ((mask & (mask - 1)) != 0) {
    throw InvalidInputError("polynomial is not univariate: " + p.to_string());
  }
  return static_cast<std::size_t>(__builtin_ctz(mask));
}

UniPoly to_dense(const MPoly& p, std::size_t var) {
  UniPoly out(p.degree_in(var) + 1, FieldElement(0));
  for (const auto& t : p.terms()) out[t.mono.exp(var)] += t.coeff;
  uni_normalize(out);
  return out;
}

MPoly from_dense(const UniPoly& p, const VarContext& ctx, std::size_t var,
                 MonomialOrder order) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_zero()) {
      terms.push_back(
          {Monomial::var(ctx.size(), var, static_cast<std::uint32_t>(i)), p[i]});
    }
  }
  return MPoly::from_terms(ctx, order, std::move(terms));
}

}  // namespace

UnivariateRoots univariate_roots(const MPoly& p, FieldTag search) {
  if (p.is_zero()) {
    throw InvalidInputError("univariate_roots of the zero polynomial");
  }
  std::size_t var = single_support_var(p);
  DenseRoots dense = dense_univariate_roots(to_dense(p, var), search);
  UnivariateRoots out;
  out.roots = std::move(dense.roots);
  if (!dense.unresolved.empty()) {
    out.unresolved = from_dense(dense.unresolved, p.context(), var, p.order());
  }
  return out;
}

// ----------------------------------------------------------------------------
// Zero-dimensional solving

namespace {

struct BackSolver {
  const std::vector<MPoly>& elements;
  const VarContext& ctx;
  FieldTag search;
  std::vector<std::size_t> min_support;  // per element
  std::vector<std::vector<FieldElement>> points;
  std::vector<MPoly> unresolved;

  BackSolver(const std::vector<MPoly>& elems, const VarContext& c, FieldTag s)
      : elements(elems), ctx(c), search(s) {
    for (const auto& e : elems) {
      std::uint32_t mask = e.support_mask();
      min_support.push_back(
          mask == 0 ? ctx.size() : static_cast<std::size_t>(__builtin_ctz(mask)));
    }
  }

  // Solve for variable `level`, with values fixed for all deeper variables.
  void solve_level(std::size_t level, std::vector<FieldElement>& values) {
    std::vector<MPoly> images;
    images.reserve(ctx.size());
    for (std::size_t v = 0; v < ctx.size(); ++v) {
      if (v > level) {
        images.push_back(MPoly::constant(ctx, MonomialOrder::Lex, values[v]));
      } else {
        images.push_back(MPoly::variable(ctx, v, MonomialOrder::Lex));
      }
    }
    UniPoly common;
    bool have = false;
    for (std::size_t e = 0; e < elements.size(); ++e) {
      if (min_support[e] != level) continue;
      MPoly sub = elements[e].substitute(images);
      if (sub.is_zero()) continue;
      if (sub.support_mask() == 0) return;  // inconsistent branch
      UniPoly u = to_dense(sub, level);
      common = have ? uni_gcd(common, u) : uni_monic(std::move(u));
      have = true;
      if (uni_degree(common) == 0) return;  // coprime constraints, no root
    }
    if (!have) {
      throw TriangularityError("no univariate constraint for variable " +
                               ctx.name(level));
    }
    DenseRoots dr = dense_univariate_roots(common, search);
    if (!dr.unresolved.empty()) {
      unresolved.push_back(
          from_dense(dr.unresolved, ctx, level, MonomialOrder::Lex));
    }
    for (const auto& [root, mult] : dr.roots) {
      (void)mult;
      values[level] = root;
      if (level == 0) {
        points.push_back(values);
      } else {
        solve_level(level - 1, values);
      }
    }
  }

  void run() {
    if (ctx.size() == 0) return;
    std::vector<FieldElement> values(ctx.size());
    solve_level(ctx.size() - 1, values);
  }
};

FMat random_change_of_variables(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-5, 5);
  while (true) {
    FMat m(n, FVec(n));
    for (auto& row : m) {
      for (auto& x : row) x = FieldElement(d(rng));
    }
    if (!det(m).is_zero()) return m;
  }
}

}  // namespace

SolutionSet solve_zero_dim(const Ideal& ideal, FieldTag search, const GBConfig& cfg) {
  if (ideal.ctx.size() == 0) {
    throw InvalidInputError("solve_zero_dim over an empty context");
  }
  GroebnerBasis grevlex = groebner(ideal.with_order(MonomialOrder::GrevLex), cfg);
  if (grevlex.is_unit_ideal()) return {};
  if (!is_zero_dimensional(grevlex)) {
    throw NotZeroDimensionalError("ideal is not zero-dimensional");
  }

  const std::size_t n = ideal.ctx.size();
  std::string last_failure;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    FMat transform = attempt == 0
                         ? identity_matrix(n)
                         : random_change_of_variables(
                               n, 0x9e3779b9u + static_cast<std::uint32_t>(attempt));
    std::vector<MPoly> gens;
    if (attempt == 0) {
      for (const auto& g : grevlex.elements()) {
        gens.push_back(g.with_order(MonomialOrder::Lex));
      }
    } else {
      std::vector<MPoly> images;
      for (std::size_t i = 0; i < n; ++i) {
        MPoly img = MPoly::zero(ideal.ctx, MonomialOrder::Lex);
        for (std::size_t j = 0; j < n; ++j) {
          if (!transform[i][j].is_zero()) {
            img = img + MPoly::variable(ideal.ctx, j, MonomialOrder::Lex)
                            .scaled(transform[i][j]);
          }
        }
        images.push_back(std::move(img));
      }
      for (const auto& g : grevlex.elements()) {
        gens.push_back(g.with_order(MonomialOrder::Lex).substitute(images));
      }
    }
    GroebnerBasis lex = groebner(Ideal(ideal.ctx, MonomialOrder::Lex, gens), cfg);
    BackSolver solver(lex.elements(), ideal.ctx, search);
    try {
      solver.run();
    } catch (const TriangularityError& e) {
      last_failure = e.what();
      continue;
    }
    SolutionSet out;
    out.unresolved = std::move(solver.unresolved);
    for (auto& y : solver.points) {
      // Map back through the change of variables: x = T y.
      out.points.push_back(attempt == 0 ? std::move(y) : mat_vec(transform, y));
    }
    for (const auto& pt : out.points) {
      for (const auto& g : ideal.generators) {
        if (!g.evaluate(pt).is_zero()) {
          throw Error("internal error: solver produced a non-solution");
        }
      }
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const std::vector<FieldElement>& a,
                 const std::vector<FieldElement>& b) {
                for (std::size_t i = 0; i < a.size(); ++i) {
                  if (a[i] != b[i]) return canonical_less(a[i], b[i]);
                }
                return false;
              });
    out.points.erase(std::unique(out.points.begin(), out.points.end()),
                     out.points.end());
    return out;
  }
  throw TriangularityError("back-substitution failed after retries: " +
                           last_failure);
}

}  // namespace cubiclines
