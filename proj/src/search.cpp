#include "digitop/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "digitop/contracts.hpp"
#include "digitop/fixpoint.hpp"

namespace digitop {

std::uint64_t map_count(std::size_t points, bool pairs) {
  constexpr std::uint64_t kCap = std::uint64_t(1) << 62;
  std::uint64_t count = 1;
  const std::size_t exponent = pairs ? 2 * points : points;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (count > kCap / std::max<std::size_t>(points, 1)) return kCap;
    count *= points;
  }
  return count;
}

namespace {

void require_budget(std::size_t points, bool pairs) {
  const auto count = map_count(points, pairs);
  if (count > kEnumerationBudget)
    throw BudgetExceeded(std::to_string(count) + (pairs ? " map pairs" : " maps") + " on " + std::to_string(points) +
                         " points exceed the enumeration budget of " + std::to_string(kEnumerationBudget));
}

// Advances a lexicographic odometer; false once it wraps.
bool next_table(std::vector<std::size_t>& table, std::size_t n) {
  std::size_t k = table.size();
  while (k > 0) {
    if (++table[k - 1] < n) return true;
    table[--k] = 0;
  }
  return false;
}

}  // namespace

void for_each_map(const std::shared_ptr<const DigitalImage>& img, const std::function<bool(const SelfMap&)>& visit) {
  const std::size_t n = img->size();
  require_budget(n, false);
  std::vector<std::size_t> table(n, 0);
  do {
    if (!visit(SelfMap(img, table))) return;
  } while (next_table(table, n));
}

void for_each_map_pair(const std::shared_ptr<const DigitalImage>& img,
                       const std::function<bool(const SelfMap&, const SelfMap&)>& visit) {
  require_budget(img->size(), true);
  const auto maps = enumerate_maps(img);
  for (const auto& first : maps)
    for (const auto& second : maps)
      if (!visit(first, second)) return;
}

std::vector<SelfMap> enumerate_maps(const std::shared_ptr<const DigitalImage>& img) {
  std::vector<SelfMap> out;
  for_each_map(img, [&](const SelfMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<DigitalMetricSpace> search_spaces(std::size_t size_bound) {
  const std::vector<MetricSpec> metrics{MetricSpec::lp(1), MetricSpec::lp(2), MetricSpec::shortest_path()};
  std::vector<std::shared_ptr<const DigitalImage>> images;
  for (std::size_t n = 1; n <= size_bound; ++n)
    images.push_back(std::make_shared<const DigitalImage>(digital_interval(0, static_cast<std::int64_t>(n) - 1)));
  for (std::size_t w = 2; w * 2 <= size_bound; ++w)
    for (std::size_t h = 2; w * h <= size_bound; ++h)
      for (int u : {1, 2})
        images.push_back(std::make_shared<const DigitalImage>(
            grid(static_cast<std::int64_t>(w), static_cast<std::int64_t>(h), Adjacency(u))));
  std::vector<DigitalMetricSpace> spaces;
  for (const auto& img : images)
    for (const auto& m : metrics) spaces.emplace_back(img, m);
  return spaces;
}

std::vector<std::shared_ptr<const DigitalImage>> connected_images(std::size_t dimension, std::int64_t window,
                                                                  std::size_t max_points, Adjacency adjacency) {
  std::vector<Point> cells;
  std::vector<Point::Coordinate> c(dimension, 0);
  while (true) {
    cells.emplace_back(c);
    std::size_t k = dimension;
    while (k > 0 && ++c[k - 1] == window) c[--k] = 0;
    if (k == 0) break;
  }
  if (cells.size() > 20) throw BudgetExceeded("window too large for subset enumeration");

  std::vector<std::shared_ptr<const DigitalImage>> out;
  std::set<std::vector<Point>> seen;
  for (std::size_t size = 1; size <= max_points; ++size) {
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << cells.size()); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      std::vector<Point> subset;
      for (std::size_t i = 0; i < cells.size(); ++i)
        if (mask & (std::uint32_t(1) << i)) subset.push_back(cells[i]);
      // Translate so every coordinate's minimum is 0.
      std::vector<Point::Coordinate> low = subset.front().coords();
      for (const auto& p : subset)
        for (std::size_t d = 0; d < dimension; ++d) low[d] = std::min(low[d], p[d]);
      std::vector<Point> normalized;
      for (const auto& p : subset) {
        std::vector<Point::Coordinate> q = p.coords();
        for (std::size_t d = 0; d < dimension; ++d) q[d] -= low[d];
        normalized.emplace_back(std::move(q));
      }
      std::sort(normalized.begin(), normalized.end());
      if (!seen.insert(normalized).second) continue;
      auto img = std::make_shared<const DigitalImage>(std::move(normalized), adjacency);
      if (img->is_connected()) out.push_back(std::move(img));
    }
  }
  return out;
}

std::string to_string(AssertionId id) {
  switch (id) {
    case AssertionId::QuasiContraction:
      return "quasi";
    case AssertionId::CiricContraction:
      return "ciric5";
    case AssertionId::DominatedPairWithInclusion:
      return "dominated-pair-inclusion";
    case AssertionId::DominatedPair:
      return "dominated-pair";
    case AssertionId::DominatedPairCompatible:
      return "dominated-pair-compatible";
    case AssertionId::SumDomination:
      return "sum-domination";
    case AssertionId::RationalCommonFixedPoint:
      return "rational";
  }
  return "unknown";
}

const std::vector<AssertionId>& all_assertion_ids() {
  static const std::vector<AssertionId> ids{
      AssertionId::QuasiContraction,        AssertionId::CiricContraction,
      AssertionId::DominatedPairWithInclusion, AssertionId::DominatedPair,
      AssertionId::DominatedPairCompatible, AssertionId::SumDomination,
      AssertionId::RationalCommonFixedPoint};
  return ids;
}

std::optional<AssertionId> parse_assertion_id(std::string_view text) {
  for (auto id : all_assertion_ids())
    if (to_string(id) == text) return id;
  return std::nullopt;
}

bool assertion_uses_pair(AssertionId id) {
  return id != AssertionId::QuasiContraction && id != AssertionId::CiricContraction;
}

bool assertion_uses_parameter(AssertionId id) { return id != AssertionId::RationalCommonFixedPoint; }

namespace {

std::vector<std::size_t> common_fixed_points(const SelfMap& a, const SelfMap& b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a(i) == i && b(i) == i) out.push_back(i);
  return out;
}

}  // namespace

bool assertion_hypothesis(AssertionId id, const DigitalMetricSpace& space, const std::vector<SelfMap>& maps,
                          const std::optional<Rational>& parameter) {
  const std::size_t expected = assertion_uses_pair(id) ? 2 : 1;
  if (maps.size() != expected) throw std::invalid_argument(to_string(id) + " takes " + std::to_string(expected) + " map(s)");
  if (assertion_uses_parameter(id) && !parameter)
    throw std::invalid_argument(to_string(id) + " needs a parameter");
  switch (id) {
    case AssertionId::QuasiContraction:
      return check_quasi(space, maps[0], *parameter).holds;
    case AssertionId::CiricContraction:
      return check_ciric5(space, maps[0], *parameter).holds;
    case AssertionId::DominatedPairWithInclusion:
    case AssertionId::DominatedPairCompatible: {
      auto r = check_pair_domination(space, maps[0], maps[1], *parameter);
      return r.inequality.holds && r.range_included;
    }
    case AssertionId::DominatedPair:
      return check_pair_domination(space, maps[0], maps[1], *parameter).inequality.holds;
    case AssertionId::SumDomination:
      return check_saluja(space, maps[0], maps[1], *parameter).inequality.holds &&
             is_continuous(maps[1]).continuous && weakly_commutative(space, maps[0], maps[1]).holds;
    case AssertionId::RationalCommonFixedPoint:
      return parv_rational_check(space, maps[0], maps[1]).holds;
  }
  return false;
}

bool assertion_conclusion(AssertionId id, const DigitalMetricSpace& space, const std::vector<SelfMap>& maps) {
  switch (id) {
    case AssertionId::QuasiContraction:
    case AssertionId::CiricContraction:
      return !fixed_points(maps.at(0)).empty();
    case AssertionId::DominatedPairWithInclusion:
    case AssertionId::DominatedPair:
      return common_fixed_points(maps.at(0), maps.at(1)).size() == 1;
    case AssertionId::DominatedPairCompatible:
      return compatible(space, maps.at(0), maps.at(1)).holds;
    case AssertionId::SumDomination:
      return !common_fixed_points(maps.at(0), maps.at(1)).empty();
    case AssertionId::RationalCommonFixedPoint: {
      // In a finite space the subsequential limits of an orbit are exactly
      // the points of its eventual cycle.
      const SelfMap& t = maps.at(0);
      const SelfMap& s = maps.at(1);
      auto common = common_fixed_points(t, s);
      if (common.size() != 1) return false;
      const Point& a = space.image().point(common.front());
      for (const auto& start : space.image().points()) {
        auto o = alternating_orbit(s, t, start);
        if (o.kind != OrbitReport::Kind::EventuallyConstant || o.settled_value() != a) return false;
      }
      return true;
    }
  }
  return false;
}

SearchOutcome find_counterexample(AssertionId id, std::size_t size_bound, const std::vector<Rational>& grid) {
  if (size_bound < 1 || size_bound > 5) throw std::invalid_argument("size bound must be between 1 and 5");
  const bool parametrized = assertion_uses_parameter(id);
  if (parametrized && grid.empty()) throw std::invalid_argument(to_string(id) + " needs a nonempty parameter grid");
  for (const auto& q : grid)
    if (q < 0 || q >= 1) throw std::invalid_argument("grid parameter " + to_string(q) + " outside [0, 1)");

  SearchOutcome outcome;
  outcome.size_bound = size_bound;
  outcome.parameter_grid = grid;
  std::vector<std::optional<Rational>> params;
  if (parametrized)
    for (const auto& q : grid) params.emplace_back(q);
  else
    params.emplace_back(std::nullopt);

  for (const auto& space : search_spaces(size_bound)) {
    ++outcome.spaces_scanned;
    auto test = [&](std::vector<SelfMap> maps) {
      ++outcome.maps_scanned;
      for (const auto& param : params) {
        if (!assertion_hypothesis(id, space, maps, param)) continue;
        ++outcome.hypothesis_hits;
        if (!assertion_conclusion(id, space, maps)) {
          outcome.status = SearchOutcome::Status::CounterexampleFound;
          outcome.counterexample = Counterexample{space, std::move(maps), param};
          return false;
        }
      }
      return true;
    };
    if (assertion_uses_pair(id))
      for_each_map_pair(space.image_ptr(), [&](const SelfMap& a, const SelfMap& b) { return test({a, b}); });
    else
      for_each_map(space.image_ptr(), [&](const SelfMap& f) { return test({f}); });
    if (outcome.counterexample) break;
  }
  return outcome;
}

bool replays(AssertionId id, const Counterexample& c) {
  return assertion_hypothesis(id, c.space, c.maps, c.parameter) && !assertion_conclusion(id, c.space, c.maps);
}

bool SuiteReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.passed; });
}

}  // namespace digitop
