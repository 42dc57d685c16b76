#include "digitop/report.hpp"

#include <algorithm>
#include <span>
#include <sstream>

namespace digitop {

using nlohmann::ordered_json;

namespace {

ordered_json pair_json(const std::pair<Point, Point>& p) {
  return ordered_json::array({p.first.to_string(), p.second.to_string()});
}

std::string pair_text(const std::pair<Point, Point>& p) {
  return "(" + p.first.to_string() + ", " + p.second.to_string() + ")";
}

const char* kind_name(OrbitReport::Kind k) {
  switch (k) {
    case OrbitReport::Kind::EventuallyConstant:
      return "eventually-constant";
    case OrbitReport::Kind::EventuallyPeriodic:
      return "eventually-periodic";
    case OrbitReport::Kind::Truncated:
      return "truncated";
  }
  return "unknown";
}

const char* status_name(SearchOutcome::Status s) {
  return s == SearchOutcome::Status::CounterexampleFound ? "counterexample-found" : "exhausted-no-counterexample";
}

ordered_json points_json(std::span<const Point> pts) {
  ordered_json out = ordered_json::array();
  for (const auto& p : pts) out.push_back(p.to_string());
  return out;
}

}  // namespace

ordered_json to_json(const ConditionReport& r) {
  ordered_json out;
  out["condition"] = r.condition;
  out["holds"] = r.holds;
  out["witness"] = r.witness ? pair_json(*r.witness) : ordered_json(nullptr);
  out["minimal_constant"] = r.minimal_constant ? ordered_json(r.minimal_constant->to_string()) : ordered_json(nullptr);
  ordered_json undefined = ordered_json::array();
  for (const auto& p : r.undefined_pairs) undefined.push_back(pair_json(p));
  out["undefined_pairs"] = std::move(undefined);
  return out;
}

ordered_json to_json(const PointwiseVerdict& v) {
  ordered_json out;
  out["holds"] = v.holds;
  out["witness"] = v.witness ? ordered_json(v.witness->to_string()) : ordered_json(nullptr);
  out["method"] = v.method;
  return out;
}

ordered_json to_json(const OrbitReport& o) {
  ordered_json out;
  out["orbit"] = points_json(o.orbit);
  out["kind"] = kind_name(o.kind);
  if (o.kind == OrbitReport::Kind::EventuallyConstant) {
    out["settle_index"] = o.settle_index;
    out["settled_value"] = o.settled_value().to_string();
  } else if (o.kind == OrbitReport::Kind::EventuallyPeriodic) {
    out["period"] = o.period;
  }
  return out;
}

ordered_json to_json(const TheoremReport& r) {
  ordered_json out;
  out["conclusion"] = to_string(r.conclusion);
  out["hypothesis"] = to_json(r.hypothesis);
  out["fixed_points"] = points_json(r.fixed_points);
  out["unique"] = r.unique;
  ordered_json orbits = ordered_json::array();
  for (const auto& o : r.orbits) orbits.push_back(to_json(o));
  out["orbits"] = std::move(orbits);
  if (r.conclusion == TheoremReport::Conclusion::RefutesAssertion) {
    out["refutation_start"] = r.refutation_start ? ordered_json(r.refutation_start->to_string()) : ordered_json(nullptr);
    out["refutation"] = r.refutation;
  }
  return out;
}

ordered_json to_json(const SearchOutcome& s, AssertionId id) {
  ordered_json out;
  out["assertion"] = to_string(id);
  out["status"] = status_name(s.status);
  out["size_bound"] = s.size_bound;
  ordered_json grid = ordered_json::array();
  for (const auto& q : s.parameter_grid) grid.push_back(to_string(q));
  out["parameter_grid"] = std::move(grid);
  out["spaces_scanned"] = s.spaces_scanned;
  out["maps_scanned"] = s.maps_scanned;
  out["hypothesis_hits"] = s.hypothesis_hits;
  if (s.counterexample) {
    const auto& c = *s.counterexample;
    ordered_json ce;
    ce["points"] = points_json(c.space.image().points());
    ce["adjacency_u"] = c.space.image().adjacency().u();
    ce["metric"] = c.space.metric().name();
    ordered_json maps = ordered_json::array();
    for (const auto& m : c.maps) maps.push_back(m.to_string());
    ce["maps"] = std::move(maps);
    ce["parameter"] = c.parameter ? ordered_json(to_string(*c.parameter)) : ordered_json(nullptr);
    ce["replays"] = replays(id, c);
    out["counterexample"] = std::move(ce);
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

ordered_json to_json(const SuiteReport& s) {
  ordered_json out;
  out["report"] = "verify-paper";
  out["all_passed"] = s.all_passed();
  ordered_json entries = ordered_json::array();
  for (const auto& e : s.entries) {
    ordered_json entry;
    entry["id"] = e.id;
    entry["title"] = e.title;
    entry["status"] = e.passed ? "PASS" : "FAIL";
    ordered_json evidence = ordered_json::object();
    for (const auto& [k, v] : e.evidence) evidence[k] = v;
    entry["evidence"] = std::move(evidence);
    entries.push_back(std::move(entry));
  }
  out["entries"] = std::move(entries);
  return out;
}

std::string render_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

std::string render_text(const ConditionReport& r) {
  std::vector<std::pair<std::string, std::string>> rows{{"condition", r.condition},
                                                        {"holds", r.holds ? "yes" : "no"}};
  if (r.witness) rows.emplace_back("witness", pair_text(*r.witness));
  if (r.minimal_constant) rows.emplace_back("minimal constant", r.minimal_constant->to_string());
  if (r.ill_defined()) {
    std::string pairs;
    for (const auto& p : r.undefined_pairs) pairs += (pairs.empty() ? "" : " ") + pair_text(p);
    rows.emplace_back("undefined pairs", pairs);
  }
  return render_table(rows);
}

std::string render_text(const OrbitReport& o) { return o.describe() + "\n"; }

std::string render_text(const TheoremReport& r) {
  std::ostringstream os;
  os << "conclusion: " << to_string(r.conclusion) << '\n' << render_text(r.hypothesis);
  os << "fixed points:";
  for (const auto& p : r.fixed_points) os << ' ' << p.to_string();
  os << (r.unique ? " (unique)" : "") << '\n';
  for (const auto& o : r.orbits) os << "  " << o.describe() << '\n';
  if (r.conclusion == TheoremReport::Conclusion::RefutesAssertion) {
    os << "refutation";
    if (r.refutation_start) os << " from " << r.refutation_start->to_string();
    os << ": " << r.refutation << '\n';
  }
  return os.str();
}

std::string render_text(const SearchOutcome& s, AssertionId id) {
  std::string grid;
  for (const auto& q : s.parameter_grid) grid += (grid.empty() ? "" : ", ") + to_string(q);
  std::vector<std::pair<std::string, std::string>> rows{{"assertion", to_string(id)},
                                                        {"status", status_name(s.status)},
                                                        {"size bound", std::to_string(s.size_bound)},
                                                        {"parameter grid", grid.empty() ? "-" : grid},
                                                        {"spaces scanned", std::to_string(s.spaces_scanned)},
                                                        {"maps scanned", std::to_string(s.maps_scanned)},
                                                        {"hypothesis hits", std::to_string(s.hypothesis_hits)}};
  if (s.counterexample) {
    const auto& c = *s.counterexample;
    std::string pts;
    for (const auto& p : c.space.image().points()) pts += (pts.empty() ? "" : " ") + p.to_string();
    rows.emplace_back("space", pts + " c_" + std::to_string(c.space.image().adjacency().u()) + " " +
                                   c.space.metric().name());
    for (std::size_t i = 0; i < c.maps.size(); ++i) rows.emplace_back("map " + std::to_string(i + 1), c.maps[i].to_string());
    if (c.parameter) rows.emplace_back("parameter", to_string(*c.parameter));
    rows.emplace_back("replays", replays(id, c) ? "yes" : "no");
  }
  return render_table(rows);
}

std::string render_text(const SuiteReport& s) {
  std::ostringstream os;
  for (const auto& e : s.entries) {
    os << (e.passed ? "PASS" : "FAIL") << "  " << e.id << "  " << e.title << '\n';
    std::size_t width = 0;
    for (const auto& [k, v] : e.evidence) width = std::max(width, k.size());
    for (const auto& [k, v] : e.evidence) os << "      " << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  os << (s.all_passed() ? "all entries passed" : "some entries failed") << '\n';
  return os.str();
}

}  // namespace digitop
