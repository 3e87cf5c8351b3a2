#pragma once

#include <array>
#include <optional>

#include "cubiclines/threefold.hpp"

namespace cubiclines {

// Coefficients of the cubic, its first and its second partials restricted to
// a line in standard position {x2 = x3 = x4 = 0}:
//   F(t0 e0 + t1 e1)               = sum_{i+j=3} t0^i t1^j  phi_f(i, j)
//   (dF/dx_v)(t0 e0 + t1 e1)       = sum_{j+k=2} t0^j t1^k  phi_d(v, j, k)
//   (d2F/dx_u dx_v)(t0 e0 + t1 e1) = sum_{k+l=1} t0^k t1^l  phi_h(u, v, k, l)
struct PhiData {
  std::array<FieldElement, 4> f3;                 // by t1-exponent
  std::array<std::array<FieldElement, 3>, 3> d2;  // [v-2][t1-exponent]
  std::array<std::array<FieldElement, 2>, 6> h1;  // [pair][t1-exponent]

  const FieldElement& phi_f(int i, int j) const;
  const FieldElement& phi_d(int v, int j, int k) const;
  const FieldElement& phi_h(int u, int v, int k, int l) const;

  bool on_cubic() const;
};

// phi data of the standardized line; detects containment via phi_f.
PhiData compute_phi(const CubicThreefold& cubic, const LineSpan& line);

// 3x3 tangency matrix: rows (2,0), (1,1), (0,2); columns v = 2, 3, 4. Its
// determinant is m(l). Requires the line on the cubic.
FMat type_matrix(const PhiData& data);

enum class ResidualShape { Conic, DoubleLine, TripleLine, Degenerate };

// Decomposition of the plane section F|_P in coordinates (t0, t1, t2) with
// the line at {t2 = 0}: F|_P = t2^k * cofactor with t2 not dividing the
// cofactor. k = 1 leaves a conic, k = 2 a residual line, k = 3 a constant.
struct ResidualDecomposition {
  MPoly plane_cubic;
  ResidualShape shape;
  MPoly cofactor;

  const MPoly& residual_conic() const { return cofactor; }
  const MPoly& residual_line() const { return cofactor; }
};

struct SecondTypeData {
  // Tangent direction (alpha2, alpha3, alpha4), first nonzero entry 1.
  std::array<FieldElement, 3> alpha;
  bool is_triple;
  ResidualDecomposition residual;
};

struct LineType {
  std::optional<SecondTypeData> second_type;
  bool is_first_type() const { return !second_type.has_value(); }
};

struct ClassifyOptions {
  bool allow_singular = false;  // accept singular cubics
  bool assume_smooth = false;   // caller already verified smoothness
  GBConfig gb;
};

// Full type decision at one line: determinant test, tangent
// direction, triple test, residual decomposition.
LineType classify(const CubicThreefold& cubic, const LineSpan& line,
                  const ClassifyOptions& opts = {});

// Plane section through the line and a point v2 off the line, in the
// original frame.
ResidualDecomposition restrict_to_plane(const CubicThreefold& cubic,
                                        const LineSpan& line, const FVec& v2);

struct TangentSpace {
  int dim;
  std::vector<FVec> basis;  // chart vectors (p02, p03, p04, p12, p13, p14)
};

// Kernel of the 4x6 Jacobian of the chart equations of F(X) at the
// (standardized) line, filled from the derivative identities
// d phi^{i,j} / d p_{0,v} = phi_v^{i,j-1},  d phi^{i,j} / d p_{1,v} = -phi_v^{i-1,j}.
TangentSpace fano_tangent_space(const CubicThreefold& cubic, const LineSpan& line);

// Rank of the 5x6 Jacobian of the local equations of M(X) at a second-type
// line; the line is a singular point of M(X) iff the rank is at most 4.
int m_curve_jacobian_rank(const CubicThreefold& cubic, const LineSpan& line,
                          const GBConfig& cfg = {});

// Symbolic chart equations of a stratum: the four containment coefficients
// and the tangency determinant m, as polynomials in the six stratum
// parameters, plus the stratum constraints.
struct ChartEquations {
  std::array<MPoly, 4> phi;  // phi^{3,0}, phi^{2,1}, phi^{1,2}, phi^{0,3}
  MPoly m;
  std::vector<MPoly> constraints;
  VarContext ctx;
  StratumParam param;
};

ChartEquations chart_equations(const CubicThreefold& cubic, const Stratum& stratum);

struct MurreNormalForm {
  FieldElement a0;
  FieldElement a1;
};

// Standardize, move the tangent direction to (0,0,1), and read the first two
// coefficients of the linear form in F = x2 q2 + x3 q3 + x4^2 l. Both vanish
// exactly for triple lines.
MurreNormalForm murre_normal_form(const CubicThreefold& cubic, const LineSpan& line,
                                  const ClassifyOptions& opts = {});

// The cubic after standardizing the line and normalizing the tangent
// direction to (0,0,1); the line of interest becomes span(e0, e1).
CubicThreefold alpha_normalized_cubic(const CubicThreefold& cubic,
                                      const LineSpan& line,
                                      const ClassifyOptions& opts = {});

}  // namespace cubiclines
