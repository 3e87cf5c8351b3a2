#include "cubiclines/report.hpp"

#include <sstream>

namespace cubiclines {

std::string field_tag_name(FieldTag tag) {
  return tag == FieldTag::Q ? "Q" : "Q(w)";
}

OrderedJson poly_to_json(const MPoly& p) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& t : p.terms()) {
    OrderedJson exps = OrderedJson::array();
    for (std::size_t i = 0; i < p.context().size(); ++i) {
      exps.push_back(t.mono.exp(i));
    }
    terms.push_back(OrderedJson{{"exponents", exps}, {"coeff", t.coeff.to_string()}});
  }
  return terms;
}

MPoly poly_from_json(const OrderedJson& j, const VarContext& ctx,
                     MonomialOrder order, FieldTag allow) {
  const OrderedJson& terms = j.is_array() ? j : j.at("terms");
  std::vector<Term> out;
  for (const auto& t : terms) {
    const auto& exps = t.at("exponents");
    if (exps.size() != ctx.size()) {
      throw InvalidInputError("term exponent count does not match the context");
    }
    std::vector<std::uint32_t> e;
    for (const auto& x : exps) e.push_back(x.get<std::uint32_t>());
    FieldElement c = parse_field_element(t.at("coeff").get<std::string>(), allow);
    out.push_back({Monomial(std::move(e)), std::move(c)});
  }
  return MPoly::from_terms(ctx, order, std::move(out));
}

namespace {

OrderedJson vec_to_json(const FVec& v) {
  OrderedJson out = OrderedJson::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

OrderedJson alpha_to_json(const std::array<FieldElement, 3>& a) {
  OrderedJson out = OrderedJson::array();
  for (const auto& c : a) out.push_back(c.to_string());
  return out;
}

}  // namespace

OrderedJson line_to_json(const LineSpan& line) {
  PlueckerCoords c = pluecker_from_span(line);
  OrderedJson pl = OrderedJson::array();
  for (const auto& x : c.p) pl.push_back(x.to_string());
  return OrderedJson{{"span", OrderedJson::array({vec_to_json(line.v0()),
                                                  vec_to_json(line.v1())})},
                     {"pluecker", pl}};
}

OrderedJson classification_to_json(const ClassificationReport& rep) {
  OrderedJson j;
  j["line"] = line_to_json(rep.line);
  j["stratum"] = OrderedJson::array({rep.stratum.i, rep.stratum.j});
  j["on_cubic"] = true;
  if (rep.type.is_first_type()) {
    j["type"] = "first";
    j["alpha"] = nullptr;
    j["is_triple"] = nullptr;
    j["residual_shape"] = nullptr;
    j["residual_line"] = nullptr;
  } else {
    const SecondTypeData& d = *rep.type.second_type;
    j["type"] = "second";
    j["alpha"] = alpha_to_json(d.alpha);
    j["is_triple"] = d.is_triple;
    switch (d.residual.shape) {
      case ResidualShape::Conic: j["residual_shape"] = "conic"; break;
      case ResidualShape::DoubleLine: j["residual_shape"] = "double_line"; break;
      case ResidualShape::TripleLine: j["residual_shape"] = "triple_line"; break;
      case ResidualShape::Degenerate: j["residual_shape"] = "degenerate"; break;
    }
    j["residual_line"] = d.residual.shape == ResidualShape::DoubleLine
                             ? OrderedJson(d.residual.residual_line().to_string())
                             : OrderedJson(nullptr);
  }
  j["fano_tangent_dim"] = rep.fano_tangent_dim;
  j["m_jacobian_rank"] =
      rep.m_jacobian_rank ? OrderedJson(*rep.m_jacobian_rank) : OrderedJson(nullptr);
  j["murre_a0"] = rep.murre ? OrderedJson(rep.murre->a0.to_string()) : OrderedJson(nullptr);
  j["murre_a1"] = rep.murre ? OrderedJson(rep.murre->a1.to_string()) : OrderedJson(nullptr);
  return j;
}

OrderedJson census_to_json(const CubicThreefold& cubic, const CensusReport& rep) {
  OrderedJson j;
  j["cubic"] = cubic.poly().to_string();
  j["field"] = field_tag_name(rep.field);
  OrderedJson strata = OrderedJson::array();
  for (const auto& s : rep.strata) {
    const VarContext& names = stratum_parameterization(s.stratum).ctx;
    OrderedJson lines = OrderedJson::array();
    for (const auto& rec : s.lines) {
      OrderedJson chart;
      for (std::size_t v = 0; v < rec.chart_coords.size(); ++v) {
        chart[names.name(v)] = rec.chart_coords[v].to_string();
      }
      lines.push_back(OrderedJson{{"chart", chart},
                                  {"alpha", alpha_to_json(rec.alpha)},
                                  {"line", line_to_json(rec.span)}});
    }
    OrderedJson unresolved = OrderedJson::array();
    for (const auto& u : s.unresolved) unresolved.push_back(u.to_string());
    OrderedJson entry{{"pivot", OrderedJson::array({s.stratum.i, s.stratum.j})},
                      {"count", s.lines.size()},
                      {"lines", lines},
                      {"unresolved", unresolved}};
    if (rep.has_timings) entry["seconds"] = s.seconds;
    strata.push_back(std::move(entry));
  }
  j["strata"] = strata;
  j["total"] = rep.total;
  j["smooth"] = rep.smooth;
  return j;
}

OrderedJson theorem_to_json(const CubicThreefold& cubic, const TheoremReport& rep) {
  OrderedJson j;
  j["cubic"] = cubic.poly().to_string();
  j["census_total"] = rep.census_total;
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : rep.checks) {
    checks.push_back(OrderedJson{{"line", line_to_json(c.line)},
                                 {"kind", c.kind},
                                 {"is_triple", c.is_triple},
                                 {"m_jacobian_rank", c.m_jacobian_rank},
                                 {"ok", c.ok}});
  }
  j["checks"] = checks;
  j["unresolved_samples"] = rep.unresolved_samples;
  j["all_pass"] = rep.all_pass;
  return j;
}

OrderedJson smooth_to_json(const CubicThreefold& cubic, bool smooth,
                           const std::optional<FVec>& witness) {
  OrderedJson j;
  j["cubic"] = cubic.poly().to_string();
  j["smooth"] = smooth;
  j["witness"] = witness ? vec_to_json(*witness) : OrderedJson(nullptr);
  return j;
}

OrderedJson tangent_to_json(const CubicThreefold& cubic, const LineSpan& line,
                            const TangentSpace& space) {
  OrderedJson j;
  j["cubic"] = cubic.poly().to_string();
  j["line"] = line_to_json(line);
  j["dim"] = space.dim;
  OrderedJson basis = OrderedJson::array();
  for (const auto& v : space.basis) basis.push_back(vec_to_json(v));
  j["basis"] = basis;
  j["chart"] = OrderedJson::array({"p02", "p03", "p04", "p12", "p13", "p14"});
  return j;
}

namespace {

void render(const OrderedJson& j, std::ostringstream& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                     (it.value().front().is_object() ||
                                      it.value().front().is_array()))) {
        out << pad << it.key() << ":\n";
        render(it.value(), out, indent + 1);
      } else {
        out << pad << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object() || item.is_array()) {
        out << pad << "-\n";
        render(item, out, indent + 1);
      } else {
        out << pad << "- " << item.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

}  // namespace

std::string render_human(const OrderedJson& j) {
  std::ostringstream out;
  render(j, out, 0);
  return out.str();
}

}  // namespace cubiclines
