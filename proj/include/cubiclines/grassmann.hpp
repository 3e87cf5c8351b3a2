#pragma once

#include <array>
#include <vector>

#include "cubiclines/linalg.hpp"
#include "cubiclines/poly.hpp"

namespace cubiclines {

// A line in P^4 as a rank-2 spanning pair. Stored exactly as given; no
// projective normalization beyond the rank check.
class LineSpan {
 public:
  LineSpan(FVec v0, FVec v1);

  const FVec& v0() const { return v0_; }
  const FVec& v1() const { return v1_; }

  // Unique row-reduced representative and its pivot columns.
  std::array<FVec, 2> rref_rows() const;
  std::pair<int, int> pivot_columns() const;

 private:
  FVec v0_, v1_;
};

// Projective equality of lines (equal row spaces).
bool same_line(const LineSpan& a, const LineSpan& b);

// The ten Pluecker coordinates, in the fixed order
// p01, p02, p03, p04, p12, p13, p14, p23, p24, p34.
struct PlueckerCoords {
  std::array<FieldElement, 10> p;

  static std::size_t index_of(int i, int j);
  const FieldElement& at(int i, int j) const { return p[index_of(i, j)]; }
  // Antisymmetric access: signed(j, i) = -signed(i, j).
  FieldElement signed_at(int i, int j) const;

  bool operator==(const PlueckerCoords& o) const { return p == o.p; }
};

// The static order of index pairs (lex): (0,1) < (0,2) < ... < (3,4).
const std::array<std::pair<int, int>, 10>& pluecker_pairs();

// Lex-first pivot stratum of the Pluecker stratification.
struct Stratum {
  int i = 0;
  int j = 1;

  bool operator==(const Stratum& o) const { return i == o.i && j == o.j; }
  bool operator!=(const Stratum& o) const { return !(*this == o); }

  static std::vector<Stratum> all();
  std::vector<int> nonpivot_columns() const;
};

PlueckerCoords pluecker_from_span(const LineSpan& line);

bool pluecker_relations_hold(const PlueckerCoords& coords);

// Row-reduced spanning pair with pivots at the stratum of the coordinates.
// Throws when the relations fail (non-decomposable input).
LineSpan span_from_pluecker(const PlueckerCoords& coords);

Stratum stratum_of(const PlueckerCoords& coords);

// Projective normalization: first nonzero coordinate scaled to 1.
PlueckerCoords pluecker_normalized(PlueckerCoords coords);

// Symbolic row-reduced spanning pair of a stratum: pivots at (i, j), the six
// non-pivot entries named by the Pluecker coordinate they equal up to sign,
// plus the vanishing constraints of all lex-earlier coordinates.
struct StratumParam {
  Stratum stratum;
  VarContext ctx;                          // six parameters, pair-lex order
  std::array<std::vector<MPoly>, 2> rows;  // 2x5 symbolic matrix
  std::vector<MPoly> constraints;
};

StratumParam stratum_parameterization(const Stratum& s);

// Evaluate the symbolic rows at concrete parameter values.
LineSpan line_at(const StratumParam& param, const std::vector<FieldElement>& values);

}  // namespace cubiclines
