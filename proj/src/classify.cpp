#include "cubiclines/classify.hpp"

#include <algorithm>

namespace cubiclines {

namespace {

const VarContext& line_ctx() {
  static const VarContext ctx({"t0", "t1"});
  return ctx;
}

const VarContext& plane_ctx() {
  static const VarContext ctx({"t0", "t1", "t2"});
  return ctx;
}

// Substitution images for restriction to the standard line.
std::vector<MPoly> standard_line_images() {
  std::vector<MPoly> images;
  images.push_back(MPoly::variable(line_ctx(), 0, MonomialOrder::GrevLex));
  images.push_back(MPoly::variable(line_ctx(), 1, MonomialOrder::GrevLex));
  for (int k = 0; k < 3; ++k) {
    images.push_back(MPoly::zero(line_ctx(), MonomialOrder::GrevLex));
  }
  return images;
}

FieldElement coeff_of(const MPoly& p, std::uint32_t i, std::uint32_t j) {
  return p.coefficient_of({0, 1}, {i, j}).constant_value();
}

// Exact division by t2^1; nullopt when t2 does not divide.
std::optional<MPoly> divide_by_var(const MPoly& p, std::size_t var) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono.exp(var) == 0) return std::nullopt;
    out.push_back({t.mono.divided_by(Monomial::var(p.context().size(), var)), t.coeff});
  }
  return MPoly::from_terms(p.context(), p.order(), std::move(out));
}

}  // namespace

const FieldElement& PhiData::phi_f(int i, int j) const {
  if (i + j != 3 || j < 0 || j > 3) throw InvalidInputError("phi_f indices");
  return f3[static_cast<std::size_t>(j)];
}

const FieldElement& PhiData::phi_d(int v, int j, int k) const {
  if (v < 2 || v > 4 || j + k != 2 || k < 0 || k > 2) {
    throw InvalidInputError("phi_d indices");
  }
  return d2[static_cast<std::size_t>(v - 2)][static_cast<std::size_t>(k)];
}

const FieldElement& PhiData::phi_h(int u, int v, int k, int l) const {
  if (u < 2 || u > 4 || v < 2 || v > 4 || k + l != 1 || l < 0 || l > 1) {
    throw InvalidInputError("phi_h indices");
  }
  if (u > v) std::swap(u, v);
  std::size_t pair = (u == 2)   ? static_cast<std::size_t>(v - 2)
                     : (u == 3) ? static_cast<std::size_t>(v)
                                : 5;  // (3,3)->3, (3,4)->4, (4,4)->5
  return h1[pair][static_cast<std::size_t>(l)];
}

bool PhiData::on_cubic() const {
  return std::all_of(f3.begin(), f3.end(),
                     [](const FieldElement& c) { return c.is_zero(); });
}

PhiData compute_phi(const CubicThreefold& cubic, const LineSpan& line) {
  CubicThreefold std_cubic = standardize(cubic, line).cubic;
  const MPoly& f = std_cubic.poly();
  std::vector<MPoly> images = standard_line_images();

  PhiData out;
  MPoly on_line = f.substitute(images);
  for (int j = 0; j <= 3; ++j) {
    out.f3[static_cast<std::size_t>(j)] =
        coeff_of(on_line, static_cast<std::uint32_t>(3 - j), static_cast<std::uint32_t>(j));
  }
  for (int v = 2; v <= 4; ++v) {
    MPoly d = f.derivative(static_cast<std::size_t>(v)).substitute(images);
    for (int k = 0; k <= 2; ++k) {
      out.d2[static_cast<std::size_t>(v - 2)][static_cast<std::size_t>(k)] =
          coeff_of(d, static_cast<std::uint32_t>(2 - k), static_cast<std::uint32_t>(k));
    }
  }
  static const int pairs[6][2] = {{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 4}};
  for (std::size_t p = 0; p < 6; ++p) {
    MPoly h = f.derivative(static_cast<std::size_t>(pairs[p][0]))
                  .derivative(static_cast<std::size_t>(pairs[p][1]))
                  .substitute(images);
    for (int l = 0; l <= 1; ++l) {
      out.h1[p][static_cast<std::size_t>(l)] =
          coeff_of(h, static_cast<std::uint32_t>(1 - l), static_cast<std::uint32_t>(l));
    }
  }
  return out;
}

FMat type_matrix(const PhiData& data) {
  if (!data.on_cubic()) {
    throw NotOnCubicError("type matrix requires a line on the cubic");
  }
  FMat m(3, FVec(3));
  for (int r = 0; r < 3; ++r) {       // rows (2,0), (1,1), (0,2)
    for (int c = 0; c < 3; ++c) {     // columns v = 2, 3, 4
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          data.phi_d(c + 2, 2 - r, r);
    }
  }
  return m;
}

ResidualDecomposition restrict_to_plane(const CubicThreefold& cubic,
                                        const LineSpan& line, const FVec& v2) {
  if (!contains_line(cubic, line)) {
    throw NotOnCubicError("plane restriction requires the line on the cubic");
  }
  if (v2.size() != 5 || matrix_rank({line.v0(), line.v1(), v2}) != 3) {
    throw InvalidInputError("v2 lies on the line (or is not a point of P^4)");
  }
  std::vector<MPoly> images;
  for (int c = 0; c < 5; ++c) {
    MPoly img = MPoly::variable(plane_ctx(), 0, MonomialOrder::GrevLex).scaled(line.v0()[c]) +
                MPoly::variable(plane_ctx(), 1, MonomialOrder::GrevLex).scaled(line.v1()[c]) +
                MPoly::variable(plane_ctx(), 2, MonomialOrder::GrevLex).scaled(v2[c]);
    images.push_back(std::move(img));
  }
  MPoly section = cubic.poly().substitute(images);

  ResidualDecomposition out;
  out.plane_cubic = section;
  if (section.is_zero()) {
    out.shape = ResidualShape::Degenerate;
    out.cofactor = section;
    return out;
  }
  int k = 0;
  MPoly cofactor = section;
  while (true) {
    auto q = divide_by_var(cofactor, 2);
    if (!q) break;
    cofactor = std::move(*q);
    ++k;
  }
  if (k == 0) {
    throw Error("internal error: plane section not divisible by t2 for a line on X");
  }
  out.cofactor = cofactor;
  out.shape = k == 1   ? ResidualShape::Conic
              : k == 2 ? ResidualShape::DoubleLine
                       : ResidualShape::TripleLine;
  return out;
}

namespace {

std::array<FieldElement, 3> kernel_direction(const FMat& m) {
  auto basis = kernel_basis(m, 3);
  if (basis.size() != 1) {
    throw TangencyRankError("tangency matrix rank is not 2 (singular cubic?)");
  }
  FVec v = basis[0];
  std::size_t first = 3;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!v[i].is_zero()) {
      first = i;
      break;
    }
  }
  FieldElement inv = v[first].inverse();
  std::array<FieldElement, 3> alpha;
  for (std::size_t i = 0; i < 3; ++i) alpha[i] = v[i] * inv;
  return alpha;
}

// The two rows of the triple-line condition applied to
// (a2^2, a3^2, a4^2, a2 a3, a2 a4, a3 a4); diagonal entries carry the 1/2.
FieldElement triple_form(const PhiData& d, int l,
                         const std::array<FieldElement, 3>& a) {
  FieldElement half(make_rational(1, 2));
  FieldElement acc;
  for (int u = 2; u <= 4; ++u) {
    acc += half * d.phi_h(u, u, 1 - l, l) * a[static_cast<std::size_t>(u - 2)] *
           a[static_cast<std::size_t>(u - 2)];
  }
  acc += d.phi_h(2, 3, 1 - l, l) * a[0] * a[1];
  acc += d.phi_h(2, 4, 1 - l, l) * a[0] * a[2];
  acc += d.phi_h(3, 4, 1 - l, l) * a[1] * a[2];
  return acc;
}

}  // namespace

LineType classify(const CubicThreefold& cubic, const LineSpan& line,
                  const ClassifyOptions& opts) {
  if (!contains_line(cubic, line)) {
    throw NotOnCubicError("line does not lie on the cubic");
  }
  if (!opts.assume_smooth && !opts.allow_singular && !is_smooth(cubic, opts.gb)) {
    throw SingularCubicError("cubic is singular; pass allow_singular to classify anyway");
  }
  Standardized std_form = standardize(cubic, line);
  LineSpan std_line(FVec{FieldElement(1), FieldElement(0), FieldElement(0),
                         FieldElement(0), FieldElement(0)},
                    FVec{FieldElement(0), FieldElement(1), FieldElement(0),
                         FieldElement(0), FieldElement(0)});
  PhiData phi = compute_phi(std_form.cubic, std_line);
  FMat m = type_matrix(phi);
  if (!det(m).is_zero()) {
    return LineType{};
  }
  std::array<FieldElement, 3> alpha = kernel_direction(m);
  bool triple = triple_form(phi, 0, alpha).is_zero() &&
                triple_form(phi, 1, alpha).is_zero();
  FVec v2 = {FieldElement(0), FieldElement(0), alpha[0], alpha[1], alpha[2]};
  ResidualDecomposition residual = restrict_to_plane(std_form.cubic, std_line, v2);
  if (residual.shape == ResidualShape::Degenerate && !opts.allow_singular) {
    throw TangencyRankError(
        "plane section vanished identically; smooth cubics contain no plane");
  }
  if (residual.shape != ResidualShape::Degenerate) {
    bool residual_triple = residual.shape == ResidualShape::TripleLine;
    if (residual_triple != triple) {
      throw Error("internal error: triple criterion disagrees with the plane section");
    }
  }
  return LineType{SecondTypeData{alpha, triple, std::move(residual)}};
}

TangentSpace fano_tangent_space(const CubicThreefold& cubic, const LineSpan& line) {
  PhiData phi = compute_phi(cubic, line);
  if (!phi.on_cubic()) {
    throw NotOnCubicError("tangent space requires the line on the cubic");
  }
  // Rows (i,j) = (3,0), (2,1), (1,2), (0,3); columns p02 p03 p04 p12 p13 p14.
  FMat jac(4, FVec(6, FieldElement(0)));
  for (int r = 0; r < 4; ++r) {
    int i = 3 - r, j = r;
    for (int v = 2; v <= 4; ++v) {
      std::size_t col0 = static_cast<std::size_t>(v - 2);
      std::size_t col1 = static_cast<std::size_t>(3 + v - 2);
      if (j - 1 >= 0) jac[static_cast<std::size_t>(r)][col0] = phi.phi_d(v, i, j - 1);
      if (i - 1 >= 0) jac[static_cast<std::size_t>(r)][col1] = -phi.phi_d(v, i - 1, j);
    }
  }
  auto basis = kernel_basis(jac, 6);
  return TangentSpace{static_cast<int>(basis.size()), std::move(basis)};
}

ChartEquations chart_equations(const CubicThreefold& cubic, const Stratum& stratum) {
  StratumParam param = stratum_parameterization(stratum);

  // Big context (t0, t1, params...) for the symbolic restriction.
  std::vector<std::string> big_names = {"t0", "t1"};
  for (const auto& n : param.ctx.names()) big_names.push_back(n);
  VarContext big(big_names);
  MPoly t0 = MPoly::variable(big, 0, MonomialOrder::GrevLex);
  MPoly t1 = MPoly::variable(big, 1, MonomialOrder::GrevLex);

  // Embed the symbolic rows into the big context.
  std::vector<MPoly> embed;
  for (std::size_t v = 0; v < param.ctx.size(); ++v) {
    embed.push_back(MPoly::variable(big, v + 2, MonomialOrder::GrevLex));
  }
  auto embed_row = [&](const MPoly& p) {
    return p.is_zero() ? MPoly::zero(big, MonomialOrder::GrevLex) : p.substitute(embed);
  };

  std::vector<MPoly> images;
  for (int c = 0; c < 5; ++c) {
    images.push_back(t0 * embed_row(param.rows[0][c]) +
                     t1 * embed_row(param.rows[1][c]));
  }

  ChartEquations out;
  out.param = param;
  MPoly restricted = cubic.poly().substitute(images);
  for (int j = 0; j <= 3; ++j) {
    out.phi[static_cast<std::size_t>(j)] = restricted.coefficient_of(
        {0, 1}, {static_cast<std::uint32_t>(3 - j), static_cast<std::uint32_t>(j)});
  }
  out.ctx = out.phi[0].context();

  // Symbolic tangency matrix over the non-pivot columns; m is its determinant.
  std::vector<int> cols = stratum.nonpivot_columns();
  std::array<std::array<MPoly, 3>, 3> entries;
  for (std::size_t c = 0; c < 3; ++c) {
    MPoly d = cubic.poly().derivative(static_cast<std::size_t>(cols[c])).substitute(images);
    for (int k = 0; k <= 2; ++k) {
      entries[static_cast<std::size_t>(k)][c] = d.coefficient_of(
          {0, 1}, {static_cast<std::uint32_t>(2 - k), static_cast<std::uint32_t>(k)});
    }
  }
  auto& e = entries;
  out.m = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
          e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
          e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
  out.constraints = param.constraints;
  return out;
}

int m_curve_jacobian_rank(const CubicThreefold& cubic, const LineSpan& line,
                          const GBConfig& cfg) {
  (void)cfg;
  Standardized std_form = standardize(cubic, line);
  ChartEquations eq = chart_equations(std_form.cubic, Stratum{0, 1});

  std::vector<FieldElement> origin(6, FieldElement(0));
  for (const auto& p : eq.phi) {
    if (!p.evaluate(origin).is_zero()) {
      throw NotOnCubicError("line does not lie on the cubic");
    }
  }
  if (!eq.m.evaluate(origin).is_zero()) {
    throw NotSecondTypeError("m(l) is nonzero: line is of the first type");
  }

  FMat jac(5, FVec(6));
  for (std::size_t r = 0; r < 5; ++r) {
    const MPoly& p = r < 4 ? eq.phi[r] : eq.m;
    for (std::size_t v = 0; v < 6; ++v) {
      jac[r][v] = p.derivative(v).evaluate(origin);
    }
  }
  return static_cast<int>(matrix_rank(jac));
}

CubicThreefold alpha_normalized_cubic(const CubicThreefold& cubic,
                                      const LineSpan& line,
                                      const ClassifyOptions& opts) {
  LineType type = classify(cubic, line, opts);
  if (type.is_first_type()) {
    throw NotSecondTypeError("alpha normalization requires a second-type line");
  }
  const auto& alpha = type.second_type->alpha;
  Standardized std_form = standardize(cubic, line);

  std::size_t pivot = 3;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!alpha[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  // Columns of the (x2,x3,x4) block: standard vectors at the non-pivot
  // slots, then alpha as the image of the new e4.
  FMat m = identity_matrix(5);
  for (int r = 2; r < 5; ++r) {
    for (int c = 2; c < 5; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = FieldElement(0);
  }
  int col = 2;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k == pivot) continue;
    m[k + 2][static_cast<std::size_t>(col)] = FieldElement(1);
    ++col;
  }
  for (std::size_t k = 0; k < 3; ++k) m[k + 2][4] = alpha[k];
  return apply_transform(std_form.cubic, ProjectiveTransform{std::move(m)});
}

MurreNormalForm murre_normal_form(const CubicThreefold& cubic, const LineSpan& line,
                                  const ClassifyOptions& opts) {
  CubicThreefold normalized = alpha_normalized_cubic(cubic, line, opts);
  LineSpan std_line(FVec{FieldElement(1), FieldElement(0), FieldElement(0),
                         FieldElement(0), FieldElement(0)},
                    FVec{FieldElement(0), FieldElement(1), FieldElement(0),
                         FieldElement(0), FieldElement(0)});
  PhiData phi = compute_phi(normalized, std_line);
  for (int k = 0; k <= 2; ++k) {
    if (!phi.phi_d(4, 2 - k, k).is_zero()) {
      throw Error("internal error: tangency column did not vanish after normalization");
    }
  }
  FieldElement half(make_rational(1, 2));
  return MurreNormalForm{half * phi.phi_h(4, 4, 1, 0), half * phi.phi_h(4, 4, 0, 1)};
}

}  // namespace cubiclines
