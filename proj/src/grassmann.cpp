#include "cubiclines/grassmann.hpp"

#include <algorithm>

#include "cubiclines/error.hpp"

namespace cubiclines {

LineSpan::LineSpan(FVec v0, FVec v1) : v0_(std::move(v0)), v1_(std::move(v1)) {
  if (v0_.size() != 5 || v1_.size() != 5) {
    throw InvalidInputError("line span points must have 5 coordinates");
  }
  if (matrix_rank({v0_, v1_}) != 2) {
    throw InvalidInputError("line span has rank below 2");
  }
}

std::array<FVec, 2> LineSpan::rref_rows() const {
  RrefResult r = rref({v0_, v1_});
  return {r.mat[0], r.mat[1]};
}

std::pair<int, int> LineSpan::pivot_columns() const {
  RrefResult r = rref({v0_, v1_});
  return {static_cast<int>(r.pivots[0]), static_cast<int>(r.pivots[1])};
}

bool same_line(const LineSpan& a, const LineSpan& b) {
  return matrix_rank({a.v0(), a.v1(), b.v0(), b.v1()}) == 2;
}

const std::array<std::pair<int, int>, 10>& pluecker_pairs() {
  static const std::array<std::pair<int, int>, 10> pairs = {
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  return pairs;
}

std::size_t PlueckerCoords::index_of(int i, int j) {
  const auto& pairs = pluecker_pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].first == i && pairs[k].second == j) return k;
  }
  throw InvalidInputError("invalid Pluecker index pair");
}

FieldElement PlueckerCoords::signed_at(int i, int j) const {
  if (i < j) return at(i, j);
  return -at(j, i);
}

std::vector<Stratum> Stratum::all() {
  std::vector<Stratum> out;
  for (const auto& [i, j] : pluecker_pairs()) out.push_back({i, j});
  return out;
}

std::vector<int> Stratum::nonpivot_columns() const {
  std::vector<int> out;
  for (int c = 0; c < 5; ++c) {
    if (c != i && c != j) out.push_back(c);
  }
  return out;
}

PlueckerCoords pluecker_from_span(const LineSpan& line) {
  PlueckerCoords out;
  const FVec& a = line.v0();
  const FVec& b = line.v1();
  for (std::size_t k = 0; k < 10; ++k) {
    auto [i, j] = pluecker_pairs()[k];
    out.p[k] = a[i] * b[j] - a[j] * b[i];
  }
  return out;
}

bool pluecker_relations_hold(const PlueckerCoords& c) {
  // The five Grassmann-Pluecker relations of G(1,4):
  // p_ij p_kl - p_ik p_jl + p_il p_jk over each 4-subset {i<j<k<l}.
  static const int quads[5][4] = {
      {0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}};
  for (const auto& q : quads) {
    FieldElement r = c.at(q[0], q[1]) * c.at(q[2], q[3]) -
                     c.at(q[0], q[2]) * c.at(q[1], q[3]) +
                     c.at(q[0], q[3]) * c.at(q[1], q[2]);
    if (!r.is_zero()) return false;
  }
  return true;
}

Stratum stratum_of(const PlueckerCoords& coords) {
  for (std::size_t k = 0; k < 10; ++k) {
    if (!coords.p[k].is_zero()) {
      auto [i, j] = pluecker_pairs()[k];
      return {i, j};
    }
  }
  throw InvalidInputError("all Pluecker coordinates vanish");
}

PlueckerCoords pluecker_normalized(PlueckerCoords coords) {
  for (const auto& x : coords.p) {
    if (!x.is_zero()) {
      FieldElement inv = x.inverse();
      for (auto& y : coords.p) y *= inv;
      return coords;
    }
  }
  throw InvalidInputError("all Pluecker coordinates vanish");
}

LineSpan span_from_pluecker(const PlueckerCoords& coords) {
  if (!pluecker_relations_hold(coords)) {
    throw InvalidInputError("Pluecker relations violated: not a line");
  }
  Stratum s = stratum_of(coords);
  FieldElement scale = coords.at(s.i, s.j).inverse();
  FVec r0(5, FieldElement(0)), r1(5, FieldElement(0));
  r0[s.i] = FieldElement(1);
  r1[s.j] = FieldElement(1);
  for (int k : s.nonpivot_columns()) {
    r0[k] = -coords.signed_at(s.j, k) * scale;
    r1[k] = coords.signed_at(s.i, k) * scale;
  }
  return LineSpan(std::move(r0), std::move(r1));
}

StratumParam stratum_parameterization(const Stratum& s) {
  // Parameter names: the Pluecker coordinate each free entry equals up to
  // sign, in pair-lex order.
  std::vector<std::pair<int, int>> pairs;
  for (int k : s.nonpivot_columns()) {
    pairs.push_back({std::min(s.i, k), std::max(s.i, k)});
    pairs.push_back({std::min(s.j, k), std::max(s.j, k)});
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::string> names;
  for (const auto& [a, b] : pairs) {
    names.push_back("p" + std::to_string(a) + std::to_string(b));
  }
  VarContext ctx(names);

  auto var_signed = [&](int a, int b) {
    // The symbolic antisymmetric coordinate p_{a,b}.
    bool flip = a > b;
    if (flip) std::swap(a, b);
    std::string name = "p" + std::to_string(a) + std::to_string(b);
    MPoly v = MPoly::variable(ctx, *ctx.index_of(name), MonomialOrder::GrevLex);
    return flip ? -v : v;
  };

  StratumParam out;
  out.stratum = s;
  out.ctx = ctx;
  MPoly zero = MPoly::zero(ctx, MonomialOrder::GrevLex);
  MPoly one = MPoly::constant(ctx, MonomialOrder::GrevLex, FieldElement(1));
  out.rows[0].assign(5, zero);
  out.rows[1].assign(5, zero);
  out.rows[0][s.i] = one;
  out.rows[1][s.j] = one;
  for (int k : s.nonpivot_columns()) {
    out.rows[0][k] = -var_signed(s.j, k);
    out.rows[1][k] = var_signed(s.i, k);
  }

  // Vanishing of every lex-earlier Pluecker coordinate, as minors of the
  // symbolic matrix.
  for (const auto& [a, b] : pluecker_pairs()) {
    if (a == s.i && b == s.j) break;
    MPoly minor = out.rows[0][a] * out.rows[1][b] - out.rows[0][b] * out.rows[1][a];
    if (!minor.is_zero()) out.constraints.push_back(minor);
  }
  return out;
}

LineSpan line_at(const StratumParam& param, const std::vector<FieldElement>& values) {
  FVec r0, r1;
  for (int c = 0; c < 5; ++c) {
    r0.push_back(param.rows[0][c].evaluate(values));
    r1.push_back(param.rows[1][c].evaluate(values));
  }
  return LineSpan(std::move(r0), std::move(r1));
}

}  // namespace cubiclines
