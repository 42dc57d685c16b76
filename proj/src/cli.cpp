#include "digitop/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "digitop/contracts.hpp"
#include "digitop/document.hpp"
#include "digitop/fixpoint.hpp"
#include "digitop/report.hpp"
#include "digitop/search.hpp"

namespace digitop::cli {

using nlohmann::ordered_json;

namespace {

struct Options {
  std::string space_path;
  std::string map_name;
  std::string map2_name;
  std::string format = "text";
  std::optional<std::size_t> max_steps;
  bool expect_pass = false;

  std::string params;
  std::string start;
  std::string set_a;
  std::string set_b;
  bool all_maps = false;
  std::string assertion;
  std::size_t size_bound = 3;
  std::string grid = "1/4,1/2,3/4";
};

// Thrown for bad invocations that the parser cannot catch itself.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep))
    if (!part.empty()) parts.push_back(part);
  return parts;
}

struct Context {
  const Options& opt;
  std::ostream& out;
  SpaceDocument doc;
  LoadedSpace loaded;

  bool json() const { return opt.format == "json"; }

  void emit(const ordered_json& j, const std::string& text) const {
    if (json())
      out << j.dump(2) << '\n';
    else
      out << text;
  }

  const DigitalMetricSpace& space() const {
    if (!loaded.space) throw UsageError("this subcommand needs a finite point set, not \"domain\": \"Z\"");
    return *loaded.space;
  }

  bool integer_line() const { return doc.integer_line; }

  const SelfMap& map(const std::string& name, const char* flag) const {
    if (name.empty()) throw UsageError(std::string(flag) + " is required");
    auto it = loaded.maps.find(name);
    if (it == loaded.maps.end()) throw UsageError("no map named \"" + name + "\" in the document");
    return it->second;
  }

  const AffineMapZ& affine(const std::string& name, const char* flag) const {
    if (name.empty()) throw UsageError(std::string(flag) + " is required");
    auto it = loaded.affine_maps.find(name);
    if (it == loaded.affine_maps.end()) throw UsageError("no affine map named \"" + name + "\" in the document");
    return it->second;
  }
};

Context open(const Options& opt, std::ostream& out) {
  if (opt.space_path.empty()) throw UsageError("--space is required");
  std::ifstream in(opt.space_path);
  if (!in) throw UsageError("cannot read " + opt.space_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Context ctx{opt, out, parse_document(buffer.str()), {}};
  ctx.loaded = load(ctx.doc);
  return ctx;
}

const char* affine_kind(AffineFixedPoints::Kind k) {
  switch (k) {
    case AffineFixedPoints::Kind::None:
      return "none";
    case AffineFixedPoints::Kind::All:
      return "all";
    case AffineFixedPoints::Kind::Single:
      return "single";
  }
  return "unknown";
}

ordered_json affine_json(const AffineMapZ& m) {
  auto fp = affine_analyze(m);
  ordered_json j;
  j["map"] = m.to_string();
  j["fixed_points"] = affine_kind(fp.kind);
  if (fp.kind == AffineFixedPoints::Kind::Single) j["fixed_point"] = fp.point;
  return j;
}

std::string affine_text(const AffineMapZ& m) {
  auto fp = affine_analyze(m);
  std::string fixed = affine_kind(fp.kind);
  if (fp.kind == AffineFixedPoints::Kind::Single) fixed += " (" + std::to_string(fp.point) + ")";
  return render_table({{"map", m.to_string()}, {"fixed points", fixed}});
}

int check_map(const Options& opt, std::ostream& out) {
  auto ctx = open(opt, out);
  if (ctx.integer_line()) {
    const auto& m = ctx.affine(opt.map_name, "--map");
    ordered_json j{{"report", "check-map"}, {"name", opt.map_name}};
    j["affine"] = affine_json(m);
    ctx.emit(j, "map " + opt.map_name + ": valid\n" + affine_text(m));
    return kExitOk;
  }
  const auto& space = ctx.space();
  const auto& f = ctx.map(opt.map_name, "--map");
  auto continuity = is_continuous(f);
  auto fixed = fixed_points(f);
  auto eps = discreteness_certificate(space).epsilon;

  ordered_json j{{"report", "check-map"}, {"name", opt.map_name}, {"valid", true}};
  j["map"] = f.to_string();
  j["continuous"] = continuity.continuous;
  j["continuity_witness"] = continuity.witness ? ordered_json::array({continuity.witness->first.to_string(),
                                                                      continuity.witness->second.to_string()})
                                               : ordered_json(nullptr);
  ordered_json fj = ordered_json::array();
  std::string ftext;
  for (const auto& p : fixed) {
    fj.push_back(p.to_string());
    ftext += (ftext.empty() ? "" : " ") + p.to_string();
  }
  j["fixed_points"] = std::move(fj);
  j["lipschitz_min"] = lipschitz_min(space, f).to_string();
  j["discreteness_epsilon"] = eps.to_string();

  std::vector<std::pair<std::string, std::string>> rows{
      {"map", opt.map_name + " = " + f.to_string()},
      {"valid", "yes"},
      {"continuous", continuity.continuous ? "yes" : "no"}};
  if (continuity.witness)
    rows.emplace_back("continuity witness",
                      continuity.witness->first.to_string() + " ~ " + continuity.witness->second.to_string());
  rows.emplace_back("fixed points", ftext.empty() ? "none" : ftext);
  rows.emplace_back("lipschitz min", lipschitz_min(space, f).to_string());
  rows.emplace_back("discreteness epsilon", eps.to_string());
  ctx.emit(j, render_table(rows));
  return opt.expect_pass && !continuity.continuous ? kExitFail : kExitOk;
}

std::map<std::string, Rational> parse_params(const std::string& text) {
  std::map<std::string, Rational> params{{"k", Rational(1, 2)},   {"a", Rational(1, 8)},
                                         {"b", Rational(1, 8)},   {"r", Rational(1, 2)},
                                         {"rho", Rational(1, 2)}, {"xi", Rational(1, 2)}};
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("parameter \"" + item + "\" is not of the form name=value");
    const std::string key = item.substr(0, eq);
    if (!params.count(key)) throw UsageError("unknown parameter \"" + key + "\" (expected k, a, b, r, rho, xi)");
    params[key] = parse_rational(item.substr(eq + 1));
  }
  return params;
}

int classify(const Options& opt, std::ostream& out) {
  auto ctx = open(opt, out);
  const auto params = parse_params(opt.params);
  ordered_json pj = ordered_json::object();
  for (const auto& [k, v] : params) pj[k] = to_string(v);

  if (ctx.integer_line()) {
    const auto& g = ctx.affine(opt.map_name, "--map");
    const auto& h = ctx.affine(opt.map2_name, "--map2");
    auto d = affine_dominates(h, g, params.at("rho"));
    ordered_json j{{"report", "classify"}, {"G", g.to_string()}, {"H", h.to_string()}, {"parameters", pj}};
    j["dominates"] = d.dominates;
    j["range_included"] = d.range_included;
    j["G_fixed_points"] = affine_json(g)["fixed_points"];
    ctx.emit(j, render_table({{"G", g.to_string()},
                              {"H", h.to_string()},
                              {"rho", to_string(params.at("rho"))},
                              {"dominates", d.dominates ? "yes" : "no"},
                              {"range included", d.range_included ? "yes" : "no"},
                              {"G fixed points", affine_kind(affine_analyze(g).kind)}}));
    return opt.expect_pass && !d.dominates ? kExitFail : kExitOk;
  }

  const auto& space = ctx.space();
  const auto& f = ctx.map(opt.map_name, "--map");
  std::vector<ConditionReport> reports;
  std::vector<std::pair<std::string, bool>> extras;
  if (opt.map2_name.empty()) {
    reports.push_back(check_banach(space, f, params.at("k")));
    reports.push_back(check_kannan(space, f, params.at("a"), params.at("b")));
    reports.push_back(check_quasi(space, f, params.at("r")));
    reports.push_back(check_ciric5(space, f, params.at("r")));
  } else {
    const auto& f2 = ctx.map(opt.map2_name, "--map2");
    auto dom = check_pair_domination(space, f, f2, params.at("rho"));
    reports.push_back(dom.inequality);
    extras.emplace_back("range included", dom.range_included);
    auto sum = check_saluja(space, f, f2, params.at("xi"));
    reports.push_back(sum.inequality);
    extras.emplace_back("both constant", sum.both_constant);
    reports.push_back(parv_rational_check(space, f, f2));
    extras.emplace_back("weakly commutative", weakly_commutative(space, f, f2).holds);
    extras.emplace_back("compatible", compatible(space, f, f2).holds);
  }

  ordered_json j{{"report", "classify"}, {"map", opt.map_name}};
  if (!opt.map2_name.empty()) j["map2"] = opt.map2_name;
  j["parameters"] = pj;
  ordered_json conditions = ordered_json::array();
  for (const auto& r : reports) conditions.push_back(to_json(r));
  j["conditions"] = std::move(conditions);
  for (const auto& [name, value] : extras) {
    std::string key = name;
    std::replace(key.begin(), key.end(), ' ', '_');
    j[key] = value;
  }

  std::vector<std::vector<std::string>> table{{"condition", "holds", "minimal constant", "witness"}};
  for (const auto& r : reports) {
    std::string witness = "-";
    if (r.witness) witness = "(" + r.witness->first.to_string() + ", " + r.witness->second.to_string() + ")";
    if (r.ill_defined()) witness += " [" + std::to_string(r.undefined_pairs.size()) + " undefined pairs]";
    table.push_back({r.condition, r.holds ? "yes" : "no",
                     r.minimal_constant ? r.minimal_constant->to_string() : "-", witness});
  }
  std::vector<std::size_t> widths(4, 0);
  for (const auto& row : table)
    for (std::size_t c = 0; c < 4; ++c) widths[c] = std::max(widths[c], row[c].size());
  std::ostringstream text;
  for (const auto& row : table) {
    for (std::size_t c = 0; c < 4; ++c) {
      text << row[c];
      if (c + 1 < 4) text << std::string(widths[c] - row[c].size() + 2, ' ');
    }
    text << '\n';
  }
  for (const auto& [name, value] : extras) text << name << ": " << (value ? "yes" : "no") << '\n';
  ctx.emit(j, text.str());

  const bool all_hold = std::all_of(reports.begin(), reports.end(), [](const ConditionReport& r) { return r.holds; });
  return opt.expect_pass && !all_hold ? kExitFail : kExitOk;
}

int fix(const Options& opt, std::ostream& out) {
  auto ctx = open(opt, out);
  if (ctx.integer_line()) {
    const auto& m = ctx.affine(opt.map_name, "--map");
    if (opt.start.empty()) throw UsageError("--start is required on \"domain\": \"Z\"");
    const Point x0 = parse_point(opt.start);
    if (x0.dimension() != 1) throw UsageError("--start must be a single integer on \"domain\": \"Z\"");
    const std::size_t steps = opt.max_steps.value_or(10);
    std::vector<std::int64_t> seq{x0[0]};
    for (std::size_t i = 0; i < steps; ++i) seq.push_back(m(seq.back()));
    ordered_json j{{"report", "fix"}, {"map", m.to_string()}, {"iterates", seq}};
    j["fixed_points"] = affine_json(m)["fixed_points"];
    std::string text;
    for (auto v : seq) text += (text.empty() ? "" : " ") + std::to_string(v);
    ctx.emit(j, text + "\n" + affine_text(m));
    return kExitOk;
  }

  const auto& t = ctx.map(opt.map_name, "--map");
  const SelfMap* s = opt.map2_name.empty() ? nullptr : &ctx.map(opt.map2_name, "--map2");
  std::vector<Point> starts;
  if (opt.start.empty()) {
    const auto pts = ctx.space().image().points();
    starts.assign(pts.begin(), pts.end());
  } else {
    starts.push_back(parse_point(opt.start));
  }
  ordered_json orbits = ordered_json::array();
  std::string text;
  for (const auto& x0 : starts) {
    OrbitReport o;
    if (s)
      o = opt.max_steps ? alternating_orbit(*s, t, x0, *opt.max_steps) : alternating_orbit(*s, t, x0);
    else
      o = opt.max_steps ? orbit(t, x0, *opt.max_steps) : orbit(t, x0);
    orbits.push_back(to_json(o));
    text += render_text(o);
  }
  ordered_json j{{"report", "fix"}, {"map", opt.map_name}};
  if (s) j["map2"] = opt.map2_name;
  j["orbits"] = std::move(orbits);
  ctx.emit(j, text);
  return kExitOk;
}

int hausdorff_cmd(const Options& opt, std::ostream& out) {
  auto ctx = open(opt, out);
  const auto a = parse_point_list(opt.set_a);
  const auto b = parse_point_list(opt.set_b);
  const Real h = hausdorff(ctx.space(), a, b);
  ordered_json j{{"report", "hausdorff"}, {"distance", h.to_string()}, {"approximate", static_cast<double>(h.to_long_double())}};
  std::ostringstream approx;
  approx << static_cast<double>(h.to_long_double());
  ctx.emit(j, h.to_string() + (h.as_rational() ? "" : "  (~" + approx.str() + ")") + "\n");
  return kExitOk;
}

int fpp(const Options& opt, std::ostream& out) {
  auto ctx = open(opt, out);
  const auto& space = ctx.space();
  auto verdict = has_fpp(space.image_ptr(), !opt.all_maps);
  ordered_json j{{"report", "fpp"},
                 {"maps", opt.all_maps ? "all" : "continuous"},
                 {"points", space.size()},
                 {"has_fpp", verdict.has_fpp},
                 {"witness", verdict.witness ? ordered_json(verdict.witness->to_string()) : ordered_json(nullptr)}};
  std::string text = render_table({{"maps", opt.all_maps ? "all" : "continuous"},
                                   {"points", std::to_string(space.size())},
                                   {"has fpp", verdict.has_fpp ? "yes" : "no"},
                                   {"witness", verdict.witness ? verdict.witness->to_string() : "-"}});
  ctx.emit(j, text);
  return opt.expect_pass && !verdict.has_fpp ? kExitFail : kExitOk;
}

int search(const Options& opt, std::ostream& out) {
  auto id = parse_assertion_id(opt.assertion);
  if (!id) {
    std::string known;
    for (auto a : all_assertion_ids()) known += (known.empty() ? "" : ", ") + to_string(a);
    throw UsageError("unknown assertion \"" + opt.assertion + "\" (expected one of " + known + ")");
  }
  std::vector<Rational> grid;
  if (assertion_uses_parameter(*id))
    for (const auto& q : split(opt.grid, ',')) grid.push_back(parse_rational(q));
  auto outcome = find_counterexample(*id, opt.size_bound, grid);
  if (opt.format == "json")
    out << to_json(outcome, *id).dump(2) << '\n';
  else
    out << render_text(outcome, *id);
  return opt.expect_pass && outcome.counterexample ? kExitFail : kExitOk;
}

int verify_paper(const Options& opt, std::ostream& out) {
  auto report = verify_paper_suite();
  if (opt.format == "json")
    out << to_json(report).dump(2) << '\n';
  else
    out << render_text(report);
  return report.all_passed() ? kExitOk : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact fixed-point and contraction checks on finite digital metric spaces", "digitop"};
  app.require_subcommand(1);
  app.add_option("--space", opt.space_path, "Space document (JSON)");
  app.add_option("--map", opt.map_name, "Name of the map in the document");
  app.add_option("--map2", opt.map2_name, "Name of the second map of a pair");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-steps", opt.max_steps, "Iteration limit for orbits");
  app.add_flag("--expect-pass", opt.expect_pass, "Exit 1 when a checked condition fails or a counterexample is found");

  auto* check_cmd = app.add_subcommand("check-map", "Validate a map and report continuity and fixed points");
  auto* classify_cmd = app.add_subcommand("classify", "Evaluate every contractive condition on a map or pair");
  classify_cmd->add_option("--params", opt.params, "Parameters, e.g. k=1/2,a=1/8,b=1/8,r=1/2,rho=1/2,xi=1/2");
  auto* fix_cmd = app.add_subcommand("fix", "Picard orbits (alternating orbits with --map2)");
  fix_cmd->add_option("--start", opt.start, "Starting point, e.g. 0 or 1,2; all points when omitted");
  auto* hausdorff_sub = app.add_subcommand("hausdorff", "Hausdorff distance between two point sets");
  hausdorff_sub->add_option("--set-a", opt.set_a, "Points separated by ';', e.g. 0,0;1,1")->required();
  hausdorff_sub->add_option("--set-b", opt.set_b, "Points separated by ';'")->required();
  auto* fpp_cmd = app.add_subcommand("fpp", "Fixed point property of the space's image");
  fpp_cmd->add_flag("--all-maps", opt.all_maps, "Consider every self-map, not only continuous ones");
  auto* search_cmd = app.add_subcommand("search", "Bounded counterexample search for an assertion");
  search_cmd->add_option("--assertion", opt.assertion, "Assertion id")->required();
  search_cmd->add_option("--size-bound", opt.size_bound, "Largest space size, 1 to 5");
  search_cmd->add_option("--grid", opt.grid, "Comma-separated parameter grid");
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the full verification suite");
  for (auto* sub : {check_cmd, classify_cmd, fix_cmd, hausdorff_sub, fpp_cmd, search_cmd, verify_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*check_cmd) return check_map(opt, out);
    if (*classify_cmd) return classify(opt, out);
    if (*fix_cmd) return fix(opt, out);
    if (*hausdorff_sub) return hausdorff_cmd(opt, out);
    if (*fpp_cmd) return fpp(opt, out);
    if (*search_cmd) return search(opt, out);
    if (*verify_cmd) return verify_paper(opt, out);
  } catch (const DocumentError& e) {
    err << "error: " << opt.space_path << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace digitop::cli
