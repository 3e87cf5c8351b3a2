#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubiclines/report.hpp"

using namespace cubiclines;

namespace {

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotOnCubic = 3;
constexpr int kExitBudget = 4;
constexpr int kExitUnresolved = 5;
constexpr int kExitSingular = 6;
constexpr int kExitCounterexample = 7;

FieldTag field_from_flag(const std::string& s) {
  if (s == "Q") return FieldTag::Q;
  if (s == "Qw" || s == "Q(w)" || s == "Qomega") return FieldTag::QOmega;
  throw InvalidInputError("--field must be Q or Qw");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The cubic argument may be a file path, an inline polynomial, or an inline
// JSON term list.
CubicThreefold load_cubic(const std::string& arg, FieldTag allow) {
  std::string text = std::filesystem::exists(arg) ? slurp(arg) : arg;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InvalidInputError("empty cubic input");
  MPoly f;
  if (text[first] == '[' || text[first] == '{') {
    OrderedJson j = OrderedJson::parse(text);
    f = poly_from_json(j, CubicThreefold::ambient_context(),
                       MonomialOrder::GrevLex, allow);
  } else {
    f = parse_poly(text, CubicThreefold::ambient_context(),
                   MonomialOrder::GrevLex, allow);
  }
  return CubicThreefold(std::move(f));
}

std::vector<FieldElement> split_elements(const std::string& s, FieldTag allow) {
  std::vector<FieldElement> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_field_element(item, allow));
  }
  return out;
}

LineSpan line_from_span_flag(const std::string& s, FieldTag allow) {
  auto semi = s.find(';');
  if (semi == std::string::npos) {
    throw InvalidInputError("--line-span wants 'a,b,c,d,e;f,g,h,i,j'");
  }
  FVec v0 = split_elements(s.substr(0, semi), allow);
  FVec v1 = split_elements(s.substr(semi + 1), allow);
  if (v0.size() != 5 || v1.size() != 5) {
    throw InvalidInputError("line span points need 5 coordinates each");
  }
  return LineSpan(std::move(v0), std::move(v1));
}

LineSpan line_from_pluecker_flag(const std::string& s, FieldTag allow) {
  std::vector<FieldElement> vals = split_elements(s, allow);
  if (vals.size() != 10) {
    throw InvalidInputError(
        "--line-pluecker wants p01,p02,p03,p04,p12,p13,p14,p23,p24,p34");
  }
  PlueckerCoords c;
  std::copy(vals.begin(), vals.end(), c.p.begin());
  return span_from_pluecker(c);
}

// Atomic write: temp file in the target directory, then rename.
void emit(const OrderedJson& j, bool json_mode, const std::string& output) {
  std::string body = json_mode ? j.dump(2) + "\n" : render_human(j);
  if (output.empty()) {
    std::cout << body;
    return;
  }
  std::filesystem::path target(output);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open output file: " + output);
    out << body;
  }
  std::filesystem::rename(tmp, target);
}

struct CommonArgs {
  std::string cubic;
  std::string field = "Qw";
  std::string line_span;
  std::string line_pluecker;
  std::string output;
  std::string stratum;
  bool json = false;
  bool allow_singular = false;
  int jobs = 1;
  bool timings = false;
  int samples = 2;
  unsigned seed = 7;
  std::size_t gb_max_pairs = 200000;
  std::size_t gb_max_basis = 4000;

  FieldTag tag() const { return field_from_flag(field); }
  GBConfig gb() const { return GBConfig{gb_max_pairs, gb_max_basis}; }

  std::optional<LineSpan> maybe_line() const {
    if (!line_span.empty() && !line_pluecker.empty()) {
      throw InvalidInputError("give either --line-span or --line-pluecker, not both");
    }
    if (!line_span.empty()) return line_from_span_flag(line_span, tag());
    if (!line_pluecker.empty()) return line_from_pluecker_flag(line_pluecker, tag());
    return std::nullopt;
  }
  LineSpan required_line() const {
    auto l = maybe_line();
    if (!l) throw InvalidInputError("a line is required: --line-span or --line-pluecker");
    return *l;
  }
  std::optional<Stratum> maybe_stratum() const {
    if (stratum.empty()) return std::nullopt;
    if (stratum.size() == 3 && stratum[1] == ',') {
      int i = stratum[0] - '0', j = stratum[2] - '0';
      if (0 <= i && i < j && j <= 4) return Stratum{i, j};
    }
    throw InvalidInputError("--stratum wants 'i,j' with 0 <= i < j <= 4");
  }
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_line) {
  cmd->add_option("--cubic", a.cubic, "cubic: file, inline polynomial, or JSON terms")
      ->required();
  cmd->add_option("--field", a.field, "coefficient/search field: Q or Qw (default Qw)");
  cmd->add_option("--output", a.output, "write the report to this file (atomic)");
  cmd->add_flag("--json", a.json, "emit JSON instead of the human rendering");
  cmd->add_flag("--allow-singular", a.allow_singular, "accept singular cubics");
  cmd->add_option("--gb-max-pairs", a.gb_max_pairs, "Groebner pair budget");
  cmd->add_option("--gb-max-basis", a.gb_max_basis, "Groebner basis size budget");
  if (with_line) {
    cmd->add_option("--line-span", a.line_span, "line as 'a,b,c,d,e;f,g,h,i,j'");
    cmd->add_option("--line-pluecker", a.line_pluecker,
                    "line as p01,p02,p03,p04,p12,p13,p14,p23,p24,p34");
  }
}

int run_classify(const CommonArgs& a) {
  CubicThreefold cubic = load_cubic(a.cubic, a.tag());
  LineSpan line = a.required_line();
  if (!contains_line(cubic, line)) {
    std::cerr << "line does not lie on the cubic\n";
    return kExitNotOnCubic;
  }
  ClassifyOptions opts;
  opts.allow_singular = a.allow_singular;
  opts.gb = a.gb();
  ClassificationReport rep{line,
                           stratum_of(pluecker_from_span(line)),
                           classify(cubic, line, opts),
                           fano_tangent_space(cubic, line).dim,
                           std::nullopt,
                           std::nullopt};
  if (!rep.type.is_first_type()) {
    rep.m_jacobian_rank = m_curve_jacobian_rank(cubic, line, a.gb());
    ClassifyOptions mopts = opts;
    mopts.assume_smooth = true;
    rep.murre = murre_normal_form(cubic, line, mopts);
  }
  emit(classification_to_json(rep), a.json, a.output);
  return 0;
}

int run_census(const CommonArgs& a) {
  CubicThreefold cubic = load_cubic(a.cubic, a.tag());
  CensusOptions opts;
  opts.field = a.tag();
  opts.allow_singular = a.allow_singular;
  opts.jobs = a.jobs;
  opts.record_timings = a.timings;
  opts.gb = a.gb();
  CensusReport rep = census_triple_lines(cubic, opts);
  if (auto only = a.maybe_stratum()) {
    // Restrict the report to one stratum; the census itself still
    // deduplicates globally.
    std::vector<StratumCensus> kept;
    for (auto& s : rep.strata) {
      if (s.stratum == *only) kept.push_back(std::move(s));
    }
    rep.strata = std::move(kept);
    rep.total = rep.strata.empty() ? 0 : rep.strata.front().lines.size();
  }
  std::size_t unresolved = 0;
  for (const auto& s : rep.strata) unresolved += s.unresolved.size();
  emit(census_to_json(cubic, rep), a.json, a.output);
  return unresolved == 0 ? 0 : kExitUnresolved;
}

int run_verify_theorem(const CommonArgs& a) {
  CubicThreefold cubic = load_cubic(a.cubic, a.tag());
  TheoremOptions opts;
  opts.samples_per_stratum = a.samples;
  opts.seed = a.seed;
  opts.field = a.tag();
  opts.allow_singular = a.allow_singular;
  opts.jobs = a.jobs;
  opts.gb = a.gb();
  TheoremReport rep = verify_theorem(cubic, opts, a.maybe_line());
  emit(theorem_to_json(cubic, rep), a.json, a.output);
  return rep.all_pass ? 0 : kExitCounterexample;
}

int run_smooth(const CommonArgs& a) {
  CubicThreefold cubic = load_cubic(a.cubic, a.tag());
  bool smooth = is_smooth(cubic, a.gb());
  std::optional<FVec> witness;
  if (!smooth) witness = singular_witness(cubic, a.tag(), a.gb());
  emit(smooth_to_json(cubic, smooth, witness), a.json, a.output);
  return 0;
}

int run_tangent(const CommonArgs& a) {
  CubicThreefold cubic = load_cubic(a.cubic, a.tag());
  LineSpan line = a.required_line();
  if (!contains_line(cubic, line)) {
    std::cerr << "line does not lie on the cubic\n";
    return kExitNotOnCubic;
  }
  TangentSpace space = fano_tangent_space(cubic, line);
  emit(tangent_to_json(cubic, line, space), a.json, a.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification and census of lines on cubic threefolds"};
  // Config values live in a [subcommand] section; command-line flags win.
  app.set_config("--config", "", "read option defaults from a config file");
  app.require_subcommand(1);

  CommonArgs classify_args, census_args, theorem_args, smooth_args, tangent_args;

  CLI::App* cmd_classify = app.add_subcommand("classify", "classify one line on a cubic");
  add_common(cmd_classify, classify_args, true);

  CLI::App* cmd_census =
      app.add_subcommand("census", "enumerate all triple lines of a smooth cubic");
  add_common(cmd_census, census_args, false);
  cmd_census->add_option("--stratum", census_args.stratum,
                         "restrict the report to one stratum 'i,j'");
  cmd_census->add_option("--jobs", census_args.jobs, "parallel stratum tasks");
  cmd_census->add_flag("--timings", census_args.timings,
                       "include per-stratum timings (non-reproducible bytes)");

  CLI::App* cmd_theorem = app.add_subcommand(
      "verify-theorem", "check: triple lines = singular points of M(X)");
  add_common(cmd_theorem, theorem_args, true);
  cmd_theorem->add_option("--samples", theorem_args.samples,
                          "second-type sample points per stratum");
  cmd_theorem->add_option("--seed", theorem_args.seed, "slice sampling seed");
  cmd_theorem->add_option("--jobs", theorem_args.jobs, "parallel stratum tasks");

  CLI::App* cmd_smooth = app.add_subcommand("smooth", "smoothness verdict");
  add_common(cmd_smooth, smooth_args, false);

  CLI::App* cmd_tangent =
      app.add_subcommand("tangent", "tangent space of the Fano surface at a line");
  add_common(cmd_tangent, tangent_args, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_classify->parsed()) return run_classify(classify_args);
    if (cmd_census->parsed()) return run_census(census_args);
    if (cmd_theorem->parsed()) return run_verify_theorem(theorem_args);
    if (cmd_smooth->parsed()) return run_smooth(smooth_args);
    if (cmd_tangent->parsed()) return run_tangent(tangent_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotOnCubicError& e) {
    std::cerr << e.what() << "\n";
    return kExitNotOnCubic;
  } catch (const BudgetExceededError& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const ResourceLimitError& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const SingularCubicError& e) {
    std::cerr << e.what() << "\n";
    return kExitSingular;
  } catch (const InvalidInputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid JSON input: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
