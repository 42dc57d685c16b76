#include <algorithm>
#include <sstream>

#include "digitop/contracts.hpp"
#include "digitop/fixpoint.hpp"
#include "digitop/search.hpp"

namespace digitop {

namespace {

using Evidence = std::vector<std::pair<std::string, std::string>>;

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<DigitalMetricSpace> spaces_over(const std::vector<std::shared_ptr<const DigitalImage>>& images) {
  std::vector<DigitalMetricSpace> out;
  for (const auto& img : images)
    for (const auto& m : {MetricSpec::lp(1), MetricSpec::lp(2), MetricSpec::shortest_path()}) out.emplace_back(img, m);
  return out;
}

std::vector<std::shared_ptr<const DigitalImage>> intervals(std::int64_t from_size, std::int64_t to_size) {
  std::vector<std::shared_ptr<const DigitalImage>> out;
  for (auto n = from_size; n <= to_size; ++n) out.push_back(std::make_shared<const DigitalImage>(digital_interval(0, n - 1)));
  return out;
}

std::string describe(const Counterexample& c) {
  std::ostringstream os;
  os << c.space.metric().name() << " on " << c.space.size() << " points, c_" << c.space.image().adjacency().u();
  for (const auto& m : c.maps) os << "; " << m.to_string();
  if (c.parameter) os << "; parameter " << to_string(*c.parameter);
  return os.str();
}

void add_outcome(Evidence& ev, const std::string& prefix, const SearchOutcome& o) {
  ev.emplace_back(prefix + "status", o.status == SearchOutcome::Status::CounterexampleFound
                                         ? "counterexample-found"
                                         : "exhausted-no-counterexample");
  ev.emplace_back(prefix + "spaces_scanned", std::to_string(o.spaces_scanned));
  ev.emplace_back(prefix + "maps_scanned", std::to_string(o.maps_scanned));
  ev.emplace_back(prefix + "hypothesis_hits", std::to_string(o.hypothesis_hits));
  if (o.counterexample) ev.emplace_back(prefix + "counterexample", describe(*o.counterexample));
}

// A probe passes when its outcome is honest: either nothing was found, or
// what was found replays.
bool outcome_consistent(AssertionId id, const SearchOutcome& o) {
  return !o.counterexample || replays(id, *o.counterexample);
}

SuiteEntry banach_entry() {
  SuiteEntry e{"banach-exhaustive", "Banach contraction principle on uniformly discrete spaces", true, {}};
  std::uint64_t maps = 0, contractions = 0, confirmed = 0, refuted = 0;
  for (const auto& space : spaces_over(intervals(3, 4))) {
    for (const auto& f : enumerate_maps(space.image_ptr())) {
      ++maps;
      auto r = banach_verify(space, f);
      if (r.conclusion == TheoremReport::Conclusion::HypothesisFails) continue;
      ++contractions;
      (r.conclusion == TheoremReport::Conclusion::ConfirmsTheorem ? confirmed : refuted)++;
    }
  }
  e.passed = refuted == 0 && confirmed == contractions;
  e.evidence = {{"spaces", "[0,2] and [0,3] under l1, l2, shortest-path"},
                {"maps_scanned", std::to_string(maps)},
                {"contractions", std::to_string(contractions)},
                {"confirmed", std::to_string(confirmed)},
                {"refuted", std::to_string(refuted)}};
  return e;
}

std::vector<std::pair<Rational, Rational>> kannan_grid() {
  const std::vector<Rational> values{0, Rational(1, 8), Rational(1, 4), Rational(3, 8)};
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& a : values)
    for (const auto& b : values)
      if (a + b < Rational(1, 2)) out.emplace_back(a, b);
  return out;
}

SuiteEntry kannan_entry() {
  SuiteEntry e{"kannan-exhaustive", "Kannan-type theorem with a + b < 1/2", true, {}};
  std::uint64_t checks = 0, hits = 0, confirmed = 0, refuted = 0;
  const auto grid = kannan_grid();
  for (const auto& space : spaces_over(intervals(3, 4))) {
    for (const auto& t : enumerate_maps(space.image_ptr())) {
      for (const auto& [a, b] : grid) {
        ++checks;
        auto r = kannan_verify(space, t, a, b);
        if (r.conclusion == TheoremReport::Conclusion::HypothesisFails) continue;
        ++hits;
        (r.conclusion == TheoremReport::Conclusion::ConfirmsTheorem ? confirmed : refuted)++;
      }
    }
  }
  e.passed = refuted == 0 && confirmed == hits;
  e.evidence = {{"spaces", "[0,2] and [0,3] under l1, l2, shortest-path"},
                {"parameter_pairs", std::to_string(grid.size())},
                {"checks", std::to_string(checks)},
                {"hypothesis_hits", std::to_string(hits)},
                {"confirmed", std::to_string(confirmed)},
                {"refuted", std::to_string(refuted)}};
  return e;
}

SuiteEntry probe_entry(AssertionId id, std::string entry_id, std::string title) {
  SuiteEntry e{std::move(entry_id), std::move(title), true, {}};
  const std::vector<Rational> grid{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  auto outcome = find_counterexample(id, 3, grid);
  add_outcome(e.evidence, "", outcome);
  e.evidence.emplace_back("parameter_grid", "1/4, 1/2, 3/4");
  e.passed = outcome_consistent(id, outcome);
  return e;
}

SuiteEntry affine_entry() {
  SuiteEntry e{"dominated-pair-affine", "Dominated pair on Z: H(x) = 0, G(x) = x + 1, rho = 1/2", true, {}};
  const AffineMapZ h{0, 0};
  const AffineMapZ g{1, 1};
  auto dom = affine_dominates(h, g, Rational(1, 2));
  auto fix = affine_analyze(g);
  const bool g_free = fix.kind == AffineFixedPoints::Kind::None;
  e.evidence = {{"H", h.to_string()},
                {"G", g.to_string()},
                {"dominates", yes_no(dom.dominates)},
                {"range_included", yes_no(dom.range_included)},
                {"G_fixed_point_free", yes_no(g_free)}};
  auto finite = find_counterexample(AssertionId::DominatedPairWithInclusion, 2, {Rational(1, 2)});
  add_outcome(e.evidence, "finite_", finite);
  const bool finite_ok = finite.counterexample && replays(AssertionId::DominatedPairWithInclusion, *finite.counterexample);
  e.evidence.emplace_back("finite_replays", yes_no(finite_ok));
  e.passed = dom.dominates && dom.range_included && g_free && finite_ok;
  return e;
}

SuiteEntry compatibility_entry() {
  SuiteEntry e{"compatibility-coincidence", "Compatibility at coincidence points", true, {}};
  auto img = std::make_shared<const DigitalImage>(digital_interval(0, 1));
  DigitalMetricSpace space(img, MetricSpec::lp(1));
  SelfMap s(img, {1, 1});
  SelfMap t(img, {1, 0});
  auto verdict = compatible(space, s, t);
  const bool example_ok = !verdict.holds && verdict.witness == Point{0};
  e.evidence = {{"S", s.to_string()},
                {"T", t.to_string()},
                {"compatible", yes_no(verdict.holds)},
                {"witness", verdict.witness ? verdict.witness->to_string() : "none"},
                {"method", verdict.method}};
  auto outcome = find_counterexample(AssertionId::DominatedPairCompatible, 3, {Rational(1, 2)});
  add_outcome(e.evidence, "corollary_", outcome);
  e.passed = example_ok && outcome_consistent(AssertionId::DominatedPairCompatible, outcome);
  return e;
}

SuiteEntry rational_entry() {
  SuiteEntry e{"rational-ill-defined", "Rational inequality is 0/0 at common fixed points", true, {}};
  std::uint64_t pairs = 0, sharing = 0, exceptions = 0;
  for (const auto& space : spaces_over(intervals(1, 3))) {
    for_each_map_pair(space.image_ptr(), [&](const SelfMap& t, const SelfMap& s) {
      ++pairs;
      std::vector<std::pair<Point, Point>> expected;
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t(i) == i && s(i) == i) expected.emplace_back(space.image().point(i), space.image().point(i));
      if (expected.empty()) return true;
      ++sharing;
      auto report = parv_rational_check(space, t, s);
      for (const auto& diag : expected)
        if (std::find(report.undefined_pairs.begin(), report.undefined_pairs.end(), diag) == report.undefined_pairs.end()) {
          ++exceptions;
          break;
        }
      return true;
    });
  }
  e.passed = exceptions == 0 && sharing > 0;
  e.evidence = {{"pairs_scanned", std::to_string(pairs)},
                {"pairs_sharing_fixed_point", std::to_string(sharing)},
                {"exceptions", std::to_string(exceptions)}};
  return e;
}

SuiteEntry sum_domination_entry() {
  SuiteEntry e{"sum-domination-constancy", "Sum-domination forces constant maps; constant pair lacks a common fixed point",
               true, {}};
  std::vector<std::shared_ptr<const DigitalImage>> images = intervals(1, 4);
  for (int u : {1, 2}) images.push_back(std::make_shared<const DigitalImage>(grid(2, 2, Adjacency(u))));
  const Rational xi(1, 2);
  std::uint64_t pairs = 0, passing = 0, nonconstant = 0;
  for (const auto& space : spaces_over(images)) {
    for_each_map_pair(space.image_ptr(), [&](const SelfMap& j, const SelfMap& k) {
      ++pairs;
      auto r = check_saluja(space, j, k, xi);
      if (r.inequality.holds) {
        ++passing;
        if (!r.both_constant) ++nonconstant;
      }
      return true;
    });
  }
  auto img = std::make_shared<const DigitalImage>(digital_interval(0, 1));
  DigitalMetricSpace space(img, MetricSpec::lp(2));
  const SelfMap j = SelfMap::constant(img, Point{0});
  const SelfMap k = SelfMap::constant(img, Point{1});
  const bool hyp = assertion_hypothesis(AssertionId::SumDomination, space, {j, k}, xi);
  const bool concl = assertion_conclusion(AssertionId::SumDomination, space, {j, k});
  e.passed = nonconstant == 0 && passing > 0 && hyp && !concl;
  e.evidence = {{"spaces", "[0,n] for n < 4 and the 2x2 grid (c_1, c_2) under l1, l2, shortest-path"},
                {"xi", to_string(xi)},
                {"pairs_scanned", std::to_string(pairs)},
                {"pairs_satisfying_inequality", std::to_string(passing)},
                {"nonconstant_satisfying_pairs", std::to_string(nonconstant)},
                {"constant_pair", "J = const 0, K = const 1 on [0,1]"},
                {"constant_pair_hypothesis", yes_no(hyp)},
                {"constant_pair_common_fixed_point", yes_no(concl)}};
  return e;
}

SuiteEntry rejection_entry() {
  SuiteEntry e{"non-lattice-rejection", "F(t) = t/2 + 1 on {0,...,4} is not a self-map of a digital image", true, {}};
  auto img = std::make_shared<const DigitalImage>(digital_interval(0, 4));
  std::vector<std::pair<RawPoint, RawPoint>> raw;
  for (int t = 0; t <= 4; ++t) raw.push_back({{Rational(t)}, {Rational(t, 2) + 1}});
  auto result = validate_selfmap(img, raw);
  const auto* rejection = std::get_if<MapRejection>(&result);
  e.passed = rejection && rejection->reason == MapRejection::Reason::NonLatticePoint &&
             rejection->point == RawPoint{Rational(1)};
  e.evidence = {{"rejected", yes_no(rejection != nullptr)},
                {"diagnostic", rejection ? rejection->message : "accepted"}};
  return e;
}

SuiteEntry fpp_entry() {
  SuiteEntry e{"fpp-characterization", "Fixed point property holds exactly for singletons", true, {}};
  std::vector<std::shared_ptr<const DigitalImage>> images = connected_images(1, 3, 3, Adjacency(1));
  for (int u : {1, 2})
    for (auto& img : connected_images(2, 3, 3, Adjacency(u))) images.push_back(std::move(img));
  std::uint64_t mismatches = 0;
  for (const auto& img : images) {
    auto verdict = has_fpp(img, true);
    if (verdict.has_fpp != (img->size() == 1)) ++mismatches;
  }
  auto pair = std::make_shared<const DigitalImage>(digital_interval(0, 1));
  auto verdict = has_fpp(pair, true);
  const bool witness_ok = !verdict.has_fpp && verdict.witness && verdict.witness->table() == std::vector<std::size_t>{1, 0};
  e.passed = mismatches == 0 && witness_ok;
  e.evidence = {{"images_checked", std::to_string(images.size())},
                {"mismatches", std::to_string(mismatches)},
                {"witness_[0,1]", verdict.witness ? verdict.witness->to_string() : "none"}};
  return e;
}

}  // namespace

SuiteReport verify_paper_suite() {
  SuiteReport report;
  report.entries.push_back(banach_entry());
  report.entries.push_back(kannan_entry());
  report.entries.push_back(probe_entry(AssertionId::QuasiContraction, "quasi-probe",
                                       "Quasi-contraction fixed-point probe (bounded search)"));
  report.entries.push_back(probe_entry(AssertionId::CiricContraction, "ciric5-probe",
                                       "Five-term quasi-contraction fixed-point probe (bounded search)"));
  report.entries.push_back(affine_entry());
  report.entries.push_back(compatibility_entry());
  report.entries.push_back(rational_entry());
  report.entries.push_back(sum_domination_entry());
  report.entries.push_back(rejection_entry());
  report.entries.push_back(fpp_entry());
  return report;
}

}  // namespace digitop
