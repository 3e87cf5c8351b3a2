#include "cubiclines/threefold.hpp"

#include <random>

namespace cubiclines {

const VarContext& CubicThreefold::ambient_context() {
  static const VarContext ctx({"x0", "x1", "x2", "x3", "x4"});
  return ctx;
}

CubicThreefold::CubicThreefold(MPoly f) : f_(std::move(f)) {
  if (f_.context() != ambient_context()) {
    throw ContextMismatchError("cubic must live in the x0..x4 context");
  }
  if (f_.is_zero()) throw InvalidInputError("cubic polynomial is zero");
  if (!f_.is_homogeneous() || f_.total_degree() != 3) {
    throw InvalidInputError("cubic must be homogeneous of degree 3");
  }
}

bool is_smooth(const CubicThreefold& cubic, const GBConfig& cfg) {
  std::vector<MPoly> partials;
  for (std::size_t i = 0; i < 5; ++i) {
    MPoly d = cubic.poly().derivative(i);
    if (!d.is_zero()) partials.push_back(std::move(d));
  }
  Ideal jac(cubic.poly().context(), MonomialOrder::GrevLex, std::move(partials));
  // The partials are homogeneous, so the origin is the only affine zero iff
  // every variable carries a pure-power leading term.
  return is_zero_dimensional(groebner(jac, cfg));
}

std::optional<FVec> singular_witness(const CubicThreefold& cubic, FieldTag search,
                                     const GBConfig& cfg) {
  const VarContext& ctx = cubic.poly().context();
  std::mt19937 rng(2718);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (std::size_t v = 0; v < 5; ++v) {
    std::vector<MPoly> gens;
    for (std::size_t i = 0; i < 5; ++i) {
      MPoly d = cubic.poly().derivative(i);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
    gens.push_back(MPoly::variable(ctx, v, MonomialOrder::GrevLex) -
                   MPoly::constant(ctx, MonomialOrder::GrevLex, FieldElement(1)));
    // Cut a positive-dimensional singular locus down with random hyperplanes.
    for (int slices = 0; slices <= 4; ++slices) {
      try {
        SolutionSet sol =
            solve_zero_dim(Ideal(ctx, MonomialOrder::GrevLex, gens), search, cfg);
        if (!sol.points.empty()) return sol.points.front();
        break;  // empty in this chart
      } catch (const NotZeroDimensionalError&) {
        MPoly slice = MPoly::zero(ctx, MonomialOrder::GrevLex);
        for (std::size_t i = 0; i < 5; ++i) {
          slice = slice + MPoly::variable(ctx, i, MonomialOrder::GrevLex)
                              .scaled(FieldElement(coeff(rng)));
        }
        if (slice.is_zero()) continue;
        gens.push_back(std::move(slice));
      } catch (const TriangularityError&) {
        break;
      }
    }
  }
  return std::nullopt;
}

bool contains_line(const CubicThreefold& cubic, const LineSpan& line) {
  static const VarContext tctx({"t0", "t1"});
  MPoly t0 = MPoly::variable(tctx, 0, MonomialOrder::GrevLex);
  MPoly t1 = MPoly::variable(tctx, 1, MonomialOrder::GrevLex);
  std::vector<MPoly> images;
  for (int c = 0; c < 5; ++c) {
    images.push_back(t0.scaled(line.v0()[c]) + t1.scaled(line.v1()[c]));
  }
  return cubic.poly().substitute(images).is_zero();
}

CubicThreefold apply_transform(const CubicThreefold& cubic,
                               const ProjectiveTransform& g) {
  const VarContext& ctx = cubic.poly().context();
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < 5; ++i) {
    MPoly img = MPoly::zero(ctx, cubic.poly().order());
    for (std::size_t j = 0; j < 5; ++j) {
      if (!g.matrix[i][j].is_zero()) {
        img = img +
              MPoly::variable(ctx, j, cubic.poly().order()).scaled(g.matrix[i][j]);
      }
    }
    images.push_back(std::move(img));
  }
  return CubicThreefold(cubic.poly().substitute(images));
}

FVec apply_to_point(const ProjectiveTransform& g, const FVec& point) {
  return mat_vec(g.matrix, point);
}

Standardized standardize(const CubicThreefold& cubic, const LineSpan& line) {
  auto rows = line.rref_rows();
  auto [c0, c1] = line.pivot_columns();
  FMat m(5, FVec(5, FieldElement(0)));
  for (int r = 0; r < 5; ++r) {
    m[r][0] = rows[0][r];
    m[r][1] = rows[1][r];
  }
  int col = 2;
  for (int k = 0; k < 5; ++k) {
    if (k == c0 || k == c1) continue;
    m[k][col] = FieldElement(1);
    ++col;
  }
  ProjectiveTransform g{std::move(m)};
  return {g, apply_transform(cubic, g)};
}

}  // namespace cubiclines
