#pragma once

#include "cubiclines/classify.hpp"

namespace cubiclines {

struct TripleLineRecord {
  Stratum stratum;
  std::vector<FieldElement> chart_coords;  // the six stratum parameters
  std::array<FieldElement, 3> alpha;       // over the non-pivot columns
  LineSpan span;
  PlueckerCoords pluecker;
};

struct StratumCensus {
  Stratum stratum;
  std::vector<TripleLineRecord> lines;
  std::vector<MPoly> unresolved;
  double seconds = 0;  // filled only when timings are requested
};

struct CensusReport {
  std::vector<StratumCensus> strata;  // all ten, in stratum order
  std::size_t total = 0;
  bool smooth = false;
  FieldTag field = FieldTag::QOmega;
  bool has_timings = false;
};

// The zero-dimensional system "line on X + plane tangent along the line +
// triple contact" for one stratum and one alpha chart. Unknowns are the six
// stratum parameters plus the free alpha entries; equations are the four
// containment coefficients, three tangency coefficients (t2-linear part),
// two triple coefficients (t2^2 part) and the stratum constraints.
Ideal triple_line_system(const CubicThreefold& cubic, const Stratum& stratum,
                         int alpha_chart);

struct CensusOptions {
  FieldTag field = FieldTag::QOmega;
  bool allow_singular = false;
  int jobs = 1;
  bool record_timings = false;
  GBConfig gb;
};

// Enumerate all triple lines, one stratum at a time, each solution
// re-verified through classify(). Unresolved univariate factors are
// surfaced in the report, never dropped.
CensusReport census_triple_lines(const CubicThreefold& cubic,
                                 const CensusOptions& opts = {});

struct SecondTypeCurve {
  Ideal ideal;  // the five chart equations plus stratum constraints
  int dim;
};

SecondTypeCurve second_type_curve(const CubicThreefold& cubic, const Stratum& stratum,
                                  const GBConfig& cfg = {});

// One verdict of the theorem check: a second-type line is a singular point
// of M(X) (Jacobian rank at most 4) exactly when it is triple.
struct TheoremCheck {
  LineSpan line;
  std::string kind;  // "census-triple", "sampled", "explicit"
  bool is_triple = false;
  int m_jacobian_rank = 0;
  bool ok = false;
};

struct TheoremReport {
  std::size_t census_total = 0;
  std::vector<TheoremCheck> checks;
  std::size_t unresolved_samples = 0;
  bool all_pass = false;
};

struct TheoremOptions {
  int samples_per_stratum = 2;
  int slice_attempts = 4;
  std::uint32_t seed = 7;
  FieldTag field = FieldTag::QOmega;
  bool allow_singular = false;
  int jobs = 1;
  GBConfig gb;
};

// Runs the census, checks the Jacobian rank of every triple line, samples
// additional second-type points per stratum by random linear slices of the
// curve of second-type lines, and checks the explicit line when given.
TheoremReport verify_theorem(const CubicThreefold& cubic,
                             const TheoremOptions& opts = {},
                             const std::optional<LineSpan>& explicit_line = {});

}  // namespace cubiclines
