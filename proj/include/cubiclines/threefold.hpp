#pragma once

#include <optional>

#include "cubiclines/grassmann.hpp"
#include "cubiclines/ideal.hpp"

namespace cubiclines {

// A cubic threefold in P^4: a nonzero homogeneous cubic in x0..x4. Singular
// cubics are representable; census and theorem verification refuse them
// unless explicitly overridden.
class CubicThreefold {
 public:
  explicit CubicThreefold(MPoly f);

  const MPoly& poly() const { return f_; }
  FieldTag field() const { return f_.coefficient_tag(); }

  static const VarContext& ambient_context();

 private:
  MPoly f_;
};

// Invertible 5x5 change of coordinates acting on points.
struct ProjectiveTransform {
  FMat matrix;
};

// True iff the five partials share no projective zero.
bool is_smooth(const CubicThreefold& cubic, const GBConfig& cfg = {});

// A projective singular point over the search field, when the solver finds
// one by dehomogenizing each coordinate in turn.
std::optional<FVec> singular_witness(const CubicThreefold& cubic,
                                     FieldTag search = FieldTag::QOmega,
                                     const GBConfig& cfg = {});

bool contains_line(const CubicThreefold& cubic, const LineSpan& line);

// F composed with the transform: (F o g)(y) = F(g y).
CubicThreefold apply_transform(const CubicThreefold& cubic,
                               const ProjectiveTransform& g);

FVec apply_to_point(const ProjectiveTransform& g, const FVec& point);

struct Standardized {
  ProjectiveTransform transform;  // maps span(e0, e1) to the input line
  CubicThreefold cubic;           // F o transform; contains the standard line
};

// Deterministic change of coordinates moving `line` to {x2 = x3 = x4 = 0}:
// the row-reduced spanning pair becomes the images of e0, e1, completed by
// standard basis vectors at the non-pivot columns in increasing order.
Standardized standardize(const CubicThreefold& cubic, const LineSpan& line);

}  // namespace cubiclines
