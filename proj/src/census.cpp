#include "cubiclines/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

namespace cubiclines {

namespace {

bool lex_less_points(const std::vector<FieldElement>& a,
                     const std::vector<FieldElement>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return canonical_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

}  // namespace

Ideal triple_line_system(const CubicThreefold& cubic, const Stratum& stratum,
                         int alpha_chart) {
  if (alpha_chart < 0 || alpha_chart > 2) {
    throw InvalidInputError("alpha chart must be 0, 1 or 2");
  }
  StratumParam param = stratum_parameterization(stratum);
  std::vector<int> nonpivot = stratum.nonpivot_columns();

  // System context: six stratum parameters, then the free alpha entries.
  std::vector<std::string> names = param.ctx.names();
  for (int m = alpha_chart + 1; m < 3; ++m) {
    names.push_back("a" + std::to_string(nonpivot[static_cast<std::size_t>(m)]));
  }
  VarContext ctx(names);
  const std::size_t nparams = param.ctx.size();

  // Big context for the symbolic plane section.
  std::vector<std::string> big_names = {"t0", "t1", "t2"};
  for (const auto& n : names) big_names.push_back(n);
  VarContext big(big_names);
  MPoly t0 = MPoly::variable(big, 0, MonomialOrder::GrevLex);
  MPoly t1 = MPoly::variable(big, 1, MonomialOrder::GrevLex);
  MPoly t2 = MPoly::variable(big, 2, MonomialOrder::GrevLex);

  std::vector<MPoly> embed_params;
  for (std::size_t v = 0; v < nparams; ++v) {
    embed_params.push_back(MPoly::variable(big, v + 3, MonomialOrder::GrevLex));
  }
  auto embed_row = [&](const MPoly& p) {
    return p.is_zero() ? MPoly::zero(big, MonomialOrder::GrevLex)
                       : p.substitute(embed_params);
  };

  // v2 spans the alpha chart: zeros below the pivot, one at it, unknowns above.
  std::array<MPoly, 5> v2;
  v2.fill(MPoly::zero(big, MonomialOrder::GrevLex));
  v2[static_cast<std::size_t>(nonpivot[static_cast<std::size_t>(alpha_chart)])] =
      MPoly::constant(big, MonomialOrder::GrevLex, FieldElement(1));
  for (int m = alpha_chart + 1; m < 3; ++m) {
    std::size_t var = 3 + nparams + static_cast<std::size_t>(m - alpha_chart - 1);
    v2[static_cast<std::size_t>(nonpivot[static_cast<std::size_t>(m)])] =
        MPoly::variable(big, var, MonomialOrder::GrevLex);
  }

  std::vector<MPoly> images;
  for (int c = 0; c < 5; ++c) {
    images.push_back(t0 * embed_row(param.rows[0][c]) +
                     t1 * embed_row(param.rows[1][c]) +
                     t2 * v2[static_cast<std::size_t>(c)]);
  }
  MPoly section = cubic.poly().substitute(images);

  std::vector<MPoly> gens;
  auto add = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    MPoly c = section.coefficient_of({0, 1, 2}, {i, j, k});
    if (!c.is_zero()) gens.push_back(std::move(c));
  };
  add(3, 0, 0);  // line containment
  add(2, 1, 0);
  add(1, 2, 0);
  add(0, 3, 0);
  add(2, 0, 1);  // tangency along the line
  add(1, 1, 1);
  add(0, 2, 1);
  add(1, 0, 2);  // triple contact
  add(0, 1, 2);

  // Stratum constraints, embedded into the system context.
  std::vector<MPoly> embed_ctx;
  for (std::size_t v = 0; v < nparams; ++v) {
    embed_ctx.push_back(MPoly::variable(ctx, v, MonomialOrder::GrevLex));
  }
  for (const auto& q : param.constraints) {
    MPoly e = q.substitute(embed_ctx);
    if (!e.is_zero()) gens.push_back(std::move(e));
  }
  if (gens.empty()) {
    throw Error("internal error: empty triple-line system");
  }
  return Ideal(ctx, MonomialOrder::Lex, std::move(gens));
}

namespace {

StratumCensus census_stratum(const CubicThreefold& cubic, const Stratum& stratum,
                             const CensusOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  StratumParam param = stratum_parameterization(stratum);
  std::vector<int> nonpivot = stratum.nonpivot_columns();
  StratumCensus out;
  out.stratum = stratum;

  for (int chart = 0; chart < 3; ++chart) {
    Ideal system = triple_line_system(cubic, stratum, chart);
    SolutionSet sol;
    try {
      sol = solve_zero_dim(system, opts.field, opts.gb);
    } catch (const NotZeroDimensionalError& e) {
      throw NotZeroDimensionalError(
          std::string(e.what()) + " (triple-line system in stratum p" +
          std::to_string(stratum.i) + std::to_string(stratum.j) + ", alpha chart " +
          std::to_string(chart) + "; impossible for a smooth cubic)");
    }
    for (auto& u : sol.unresolved) out.unresolved.push_back(std::move(u));
    for (const auto& pt : sol.points) {
      std::vector<FieldElement> coords(pt.begin(), pt.begin() + 6);
      std::array<FieldElement, 3> alpha{FieldElement(0), FieldElement(0),
                                        FieldElement(0)};
      alpha[static_cast<std::size_t>(chart)] = FieldElement(1);
      for (int m = chart + 1; m < 3; ++m) {
        alpha[static_cast<std::size_t>(m)] =
            pt[6 + static_cast<std::size_t>(m - chart - 1)];
      }
      LineSpan span = line_at(param, coords);
      PlueckerCoords pluecker = pluecker_from_span(span);
      if (stratum_of(pluecker) != stratum) {
        throw Error("internal error: census solution escaped its stratum");
      }
      // Independent re-check through the classification path.
      ClassifyOptions copts;
      copts.assume_smooth = true;
      copts.allow_singular = opts.allow_singular;
      copts.gb = opts.gb;
      LineType type = classify(cubic, span, copts);
      if (type.is_first_type() || !type.second_type->is_triple) {
        throw Error("internal error: census solution fails classify re-check");
      }
      out.lines.push_back(TripleLineRecord{stratum, std::move(coords), alpha,
                                           std::move(span), pluecker});
    }
  }

  std::sort(out.lines.begin(), out.lines.end(),
            [](const TripleLineRecord& a, const TripleLineRecord& b) {
              return lex_less_points(a.chart_coords, b.chart_coords);
            });
  // Alpha charts partition the tangent directions, so records are distinct;
  // re-check instead of trusting it.
  for (std::size_t i = 0; i + 1 < out.lines.size(); ++i) {
    if (out.lines[i].chart_coords == out.lines[i + 1].chart_coords) {
      throw Error("internal error: duplicate census record inside a stratum");
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  return out;
}

}  // namespace

CensusReport census_triple_lines(const CubicThreefold& cubic,
                                 const CensusOptions& opts) {
  CensusReport report;
  report.field = opts.field;
  report.smooth = is_smooth(cubic, opts.gb);
  report.has_timings = opts.record_timings;
  if (!report.smooth && !opts.allow_singular) {
    throw SingularCubicError(
        "census requires a smooth cubic (pass allow_singular to override)");
  }

  std::vector<Stratum> strata = Stratum::all();
  std::vector<StratumCensus> results(strata.size());
  if (opts.jobs > 1) {
    // Work queue over the ten strata.
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    std::mutex mu;
    std::exception_ptr first_error;
    for (int t = 0; t < opts.jobs; ++t) {
      threads.emplace_back([&]() {
        while (true) {
          std::size_t k = next.fetch_add(1);
          if (k >= strata.size()) return;
          try {
            StratumCensus c = census_stratum(cubic, strata[k], opts);
            std::lock_guard<std::mutex> lk(mu);
            results[k] = std::move(c);
          } catch (...) {
            std::lock_guard<std::mutex> lk(mu);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& th : threads) th.join();
    if (first_error) std::rethrow_exception(first_error);
  } else {
    for (std::size_t k = 0; k < strata.size(); ++k) {
      results[k] = census_stratum(cubic, strata[k], opts);
    }
  }

  // Global distinctness across strata, on normalized Pluecker coordinates.
  std::vector<std::vector<FieldElement>> all;
  for (const auto& sc : results) {
    for (const auto& rec : sc.lines) {
      PlueckerCoords n = pluecker_normalized(rec.pluecker);
      all.emplace_back(n.p.begin(), n.p.end());
    }
  }
  std::sort(all.begin(), all.end(), lex_less_points);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (all[i] == all[i + 1]) {
      throw Error("internal error: a triple line appears in two strata");
    }
  }

  for (auto& sc : results) {
    if (!opts.record_timings) sc.seconds = 0;
    report.total += sc.lines.size();
    report.strata.push_back(std::move(sc));
  }
  return report;
}

SecondTypeCurve second_type_curve(const CubicThreefold& cubic, const Stratum& stratum,
                                  const GBConfig& cfg) {
  ChartEquations eq = chart_equations(cubic, stratum);
  std::vector<MPoly> gens;
  for (const auto& f : eq.phi) {
    if (!f.is_zero()) gens.push_back(f);
  }
  if (!eq.m.is_zero()) gens.push_back(eq.m);
  for (const auto& q : eq.constraints) {
    if (!q.is_zero()) gens.push_back(q);
  }
  Ideal ideal(eq.ctx, MonomialOrder::GrevLex, std::move(gens));
  int dim = dimension(groebner(ideal, cfg));
  return SecondTypeCurve{std::move(ideal), dim};
}

TheoremReport verify_theorem(const CubicThreefold& cubic, const TheoremOptions& opts,
                             const std::optional<LineSpan>& explicit_line) {
  if (!opts.allow_singular && !is_smooth(cubic, opts.gb)) {
    throw SingularCubicError("theorem verification requires a smooth cubic");
  }
  TheoremReport report;

  CensusOptions copts;
  copts.field = opts.field;
  copts.allow_singular = opts.allow_singular;
  copts.jobs = opts.jobs;
  copts.gb = opts.gb;
  CensusReport census = census_triple_lines(cubic, copts);
  report.census_total = census.total;

  auto check_line = [&](const LineSpan& line, const std::string& kind) {
    ClassifyOptions cl;
    cl.assume_smooth = true;
    cl.allow_singular = opts.allow_singular;
    cl.gb = opts.gb;
    LineType type = classify(cubic, line, cl);
    if (type.is_first_type()) {
      throw NotSecondTypeError("checked line is of the first type");
    }
    int rank = m_curve_jacobian_rank(cubic, line, opts.gb);
    bool triple = type.second_type->is_triple;
    report.checks.push_back(
        TheoremCheck{line, kind, triple, rank, triple == (rank <= 4)});
  };

  for (const auto& s : census.strata) {
    for (const auto& rec : s.lines) check_line(rec.span, "census-triple");
  }

  // Sample further second-type points by slicing the curve of second-type
  // lines; roots outside the search field are counted, never guessed.
  // Sparse coordinate slices keep the exact elimination tractable; slices
  // that land on positive-dimensional pieces, blow the reduced budget or
  // push a coefficient past the trial-division range just fail the attempt.
  std::mt19937 rng(opts.seed);
  GBConfig sample_gb = opts.gb;
  sample_gb.max_pairs = std::min<std::size_t>(sample_gb.max_pairs, 2500);
  sample_gb.max_basis = std::min<std::size_t>(sample_gb.max_basis, 150);
  static const long kSliceValues[] = {1, -1, 0, 2, -2, 3};
  for (const Stratum& s : Stratum::all()) {
    if (opts.samples_per_stratum <= 0) break;
    SecondTypeCurve curve = second_type_curve(cubic, s, opts.gb);
    if (curve.dim < 0) continue;  // no second-type lines in this stratum
    StratumParam param = stratum_parameterization(s);
    int collected = 0;
    std::vector<std::vector<FieldElement>> seen;
    for (int attempt = 0; attempt < opts.slice_attempts &&
                          collected < opts.samples_per_stratum;
         ++attempt) {
      std::vector<MPoly> gens = curve.ideal.generators;
      std::uniform_int_distribution<std::size_t> pick(0, curve.ideal.ctx.size() - 1);
      std::uniform_int_distribution<std::size_t> val(0, 5);
      for (int d = 0; d < curve.dim; ++d) {
        MPoly slice =
            MPoly::variable(curve.ideal.ctx, pick(rng), MonomialOrder::GrevLex) -
            MPoly::constant(curve.ideal.ctx, MonomialOrder::GrevLex,
                            FieldElement(kSliceValues[val(rng)]));
        gens.push_back(std::move(slice));
      }
      SolutionSet sol;
      try {
        sol = solve_zero_dim(Ideal(curve.ideal.ctx, MonomialOrder::Lex, gens),
                             opts.field, sample_gb);
      } catch (const NotZeroDimensionalError&) {
        continue;
      } catch (const BudgetExceededError&) {
        continue;
      } catch (const ResourceLimitError&) {
        continue;
      } catch (const TriangularityError&) {
        continue;
      }
      report.unresolved_samples += sol.unresolved.size();
      for (const auto& pt : sol.points) {
        if (collected >= opts.samples_per_stratum) break;
        if (std::find(seen.begin(), seen.end(), pt) != seen.end()) continue;
        seen.push_back(pt);
        check_line(line_at(param, pt), "sampled");
        ++collected;
      }
    }
  }

  if (explicit_line) check_line(*explicit_line, "explicit");

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const TheoremCheck& c) { return c.ok; });
  return report;
}

}  // namespace cubiclines
