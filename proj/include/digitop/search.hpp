#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digitop/exact.hpp"
#include "digitop/mapkit.hpp"
#include "digitop/metric.hpp"
#include "digitop/space.hpp"

namespace digitop {

/// Most maps (or map pairs) one enumeration may visit.
inline constexpr std::uint64_t kEnumerationBudget = 1'000'000;

/// |X|^|X|, or |X|^(2|X|) for pairs; saturates instead of overflowing.
std::uint64_t map_count(std::size_t points, bool pairs);

/// Visits every total self-map of img once, tables in lexicographic order
/// (first point most significant).  The visitor returns false to stop early.
/// Throws BudgetExceeded if the count exceeds kEnumerationBudget.
void for_each_map(const std::shared_ptr<const DigitalImage>& img, const std::function<bool(const SelfMap&)>& visit);
/// Pairs (first, second) with first as the outer loop.
void for_each_map_pair(const std::shared_ptr<const DigitalImage>& img,
                       const std::function<bool(const SelfMap&, const SelfMap&)>& visit);
std::vector<SelfMap> enumerate_maps(const std::shared_ptr<const DigitalImage>& img);

/// Intervals [0, n-1] for n <= size_bound, then w x h rectangles in Z^2
/// (w, h >= 2, w h <= size_bound) under c_1 and c_2; each under l_1, l_2 and
/// the shortest-path metric, in that order.
std::vector<DigitalMetricSpace> search_spaces(std::size_t size_bound);

/// Connected images with at most max_points points inside the window
/// [0, window-1]^dimension, one per translation class, in a fixed order.
std::vector<std::shared_ptr<const DigitalImage>> connected_images(std::size_t dimension, std::int64_t window,
                                                                  std::size_t max_points, Adjacency adjacency);

/// Assertions whose hypotheses are checkable contractive conditions and whose
/// conclusions are fixed-point claims.  Pairs are ordered as noted.
enum class AssertionId {
  QuasiContraction,           // quasi(r) => Fix(T) nonempty
  CiricContraction,           // ciric5(r) => Fix(T) nonempty
  DominatedPairWithInclusion, // (G, H): domination(rho) and H(X) in G(X) => unique common fixed point
  DominatedPair,              // (G, H): domination(rho) => unique common fixed point
  DominatedPairCompatible,    // (G, H): domination(rho) and H(X) in G(X) => compatible
  SumDomination,              // (J, K): sum-domination(xi), K continuous, weakly commutative => common fixed point
  RationalCommonFixedPoint,   // (T, S): rational inequality on defined pairs => every alternating
                              //   orbit accumulates only at the unique common fixed point
};

std::string to_string(AssertionId id);
std::optional<AssertionId> parse_assertion_id(std::string_view text);
const std::vector<AssertionId>& all_assertion_ids();
bool assertion_uses_pair(AssertionId id);
bool assertion_uses_parameter(AssertionId id);

struct Counterexample {
  DigitalMetricSpace space;
  std::vector<SelfMap> maps;  // one map, or the pair in the order documented on AssertionId
  std::optional<Rational> parameter;
};

struct SearchOutcome {
  enum class Status { CounterexampleFound, ExhaustedNoCounterexample };
  Status status = Status::ExhaustedNoCounterexample;
  std::optional<Counterexample> counterexample;
  std::size_t size_bound = 0;
  std::vector<Rational> parameter_grid;
  std::uint64_t spaces_scanned = 0;
  std::uint64_t maps_scanned = 0;       // maps or pairs
  std::uint64_t hypothesis_hits = 0;    // (map, parameter) combinations satisfying the hypothesis
};

bool assertion_hypothesis(AssertionId id, const DigitalMetricSpace& space, const std::vector<SelfMap>& maps,
                          const std::optional<Rational>& parameter);
bool assertion_conclusion(AssertionId id, const DigitalMetricSpace& space, const std::vector<SelfMap>& maps);

/// Scans search_spaces(size_bound), all maps or pairs, all grid parameters, and
/// returns the first counterexample in scan order.  Throws
/// std::invalid_argument for size_bound outside [1, 5], an empty grid (for a
/// parametrized assertion) or a parameter outside [0, 1), and BudgetExceeded
/// when a space has too many maps.
SearchOutcome find_counterexample(AssertionId id, std::size_t size_bound, const std::vector<Rational>& grid);

/// Re-runs hypothesis and conclusion on a found counterexample: true iff the
/// hypothesis holds and the conclusion fails.
bool replays(AssertionId id, const Counterexample& c);

struct SuiteEntry {
  std::string id;
  std::string title;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> evidence;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  bool all_passed() const;
};

/// Every verification of the library's theorem checks, probes and
/// counterexamples, in a fixed order.  Deterministic.
SuiteReport verify_paper_suite();

}  // namespace digitop
