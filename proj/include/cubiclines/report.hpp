#pragma once

#include <string>

#include <json.hpp>

#include "cubiclines/census.hpp"

namespace cubiclines {

using OrderedJson = nlohmann::ordered_json;

std::string field_tag_name(FieldTag tag);

OrderedJson poly_to_json(const MPoly& p);
MPoly poly_from_json(const OrderedJson& j, const VarContext& ctx,
                     MonomialOrder order, FieldTag allow);

OrderedJson line_to_json(const LineSpan& line);

// Full per-line classification report, as produced by the classify command.
struct ClassificationReport {
  LineSpan line;
  Stratum stratum;
  LineType type;
  int fano_tangent_dim = 0;
  std::optional<int> m_jacobian_rank;
  std::optional<MurreNormalForm> murre;
};

OrderedJson classification_to_json(const ClassificationReport& rep);

OrderedJson census_to_json(const CubicThreefold& cubic, const CensusReport& rep);

OrderedJson theorem_to_json(const CubicThreefold& cubic, const TheoremReport& rep);

OrderedJson smooth_to_json(const CubicThreefold& cubic, bool smooth,
                           const std::optional<FVec>& witness);

OrderedJson tangent_to_json(const CubicThreefold& cubic, const LineSpan& line,
                            const TangentSpace& space);

// Human-readable rendering of a report: a plain walk of the same JSON value,
// never a separate code path.
std::string render_human(const OrderedJson& j);

}  // namespace cubiclines
