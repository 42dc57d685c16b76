#include <doctest.h>

#include <algorithm>

#include "digitop/contracts.hpp"
#include "digitop/search.hpp"

using namespace digitop;

namespace {

std::shared_ptr<const DigitalImage> interval(std::int64_t a, std::int64_t b) {
  return std::make_shared<const DigitalImage>(digital_interval(a, b));
}

DigitalMetricSpace line(std::int64_t n) { return DigitalMetricSpace(interval(0, n - 1), MetricSpec::lp(1)); }

SelfMap table_map(const DigitalMetricSpace& s, std::vector<std::size_t> t) { return SelfMap(s.image_ptr(), std::move(t)); }

// Integer distances on an interval, computed without the library.
Rational d(const SelfMap& f, std::size_t i, std::size_t j) {
  (void)f;
  return Rational(i > j ? i - j : j - i);
}

Rational max_of(std::initializer_list<Rational> xs) { return *std::max_element(xs.begin(), xs.end()); }

bool quasi_oracle(const SelfMap& t, const Rational& r) {
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y)
      if (d(t, t(x), t(y)) > r * max_of({d(t, x, y), d(t, x, t(x)), d(t, y, t(y))})) return false;
  return true;
}

bool ciric_oracle(const SelfMap& t, const Rational& r) {
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y)
      if (d(t, t(x), t(y)) >
          r * max_of({d(t, x, y), d(t, x, t(x)), d(t, y, t(y)), d(t, x, t(y)), d(t, t(x), y)}))
        return false;
  return true;
}

bool kannan_oracle(const SelfMap& t, const Rational& a, const Rational& b) {
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y)
      if (d(t, t(x), t(y)) > a * (d(t, x, t(x)) + d(t, y, t(y))) + b * (d(t, x, t(y)) + d(t, t(x), y))) return false;
  return true;
}

Rational lipschitz_oracle(const SelfMap& f) {
  Rational best(0);
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < f.size(); ++y)
      if (x != y) best = std::max(best, d(f, f(x), f(y)) / d(f, x, y));
  return best;
}

}  // namespace

TEST_CASE("banach examples") {
  auto s = line(3);
  CHECK(lipschitz_min(s, SelfMap::constant(s.image_ptr(), {1})) == Ratio(0));
  CHECK(lipschitz_min(s, SelfMap::identity(s.image_ptr())) == Ratio(1));
  CHECK(lipschitz_min(s, table_map(s, {0, 0, 1})) == Ratio(1));
  auto r = check_banach(s, table_map(s, {0, 0, 1}), Ratio(Rational(1, 2)));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->first == Point{1});
  CHECK(r.witness->second == Point{2});
  CHECK_THROWS(check_banach(s, SelfMap::identity(s.image_ptr()), Ratio(Real(-1), Real(1))));
  CHECK(lipschitz_min(line(1), SelfMap::identity(line(1).image_ptr())) == Ratio(0));
}

TEST_CASE("banach with an irrational Lipschitz constant") {
  DigitalMetricSpace sq(grid(2, 2, Adjacency(2)), MetricSpec::lp(2));
  // Everything to (0,0) except (1,1) -> (1,0).
  SelfMap f(sq.image_ptr(), {0, 0, 0, 2});
  CHECK(lipschitz_min(sq, f) == Ratio(1));  // ((0,1),(1,1)) forces 1
  // (1,1) -> (0,1), (1,0) -> (0,0), rest fixed: ((0,0),(1,1)) maps to distance 1 out of sqrt(2)
  SelfMap h(sq.image_ptr(), {0, 1, 0, 1});
  CHECK(check_banach(sq, h, Ratio(Real::sqrt_of(2), Real(2))).holds == false);
  SelfMap g(sq.image_ptr(), {0, 0, 0, 0});
  CHECK(lipschitz_min(sq, g) == Ratio(0));
  CHECK(check_banach(sq, f, Ratio(Real::sqrt_of(2), Real(2))).holds == false);
}

TEST_CASE("kannan examples") {
  auto s = line(2);
  CHECK(check_kannan(s, SelfMap::constant(s.image_ptr(), {0}), 0, 0).holds);
  auto id = check_kannan(s, SelfMap::identity(s.image_ptr()), Rational(1, 5), Rational(1, 5));
  CHECK_FALSE(id.holds);
  REQUIRE(id.witness);
  CHECK(id.witness->first == Point{0});
  CHECK(id.witness->second == Point{1});
  // 1 <= s (2/5) at (0, 1): least scale factor 5/2
  CHECK(id.minimal_constant->value == Ratio(Rational(5, 2)));
  auto id0 = check_kannan(s, SelfMap::identity(s.image_ptr()), Rational(1, 5), 0);
  CHECK(id0.minimal_constant->status == MinimalConstant::Status::NonePossible);
  CHECK_FALSE(check_kannan(s, table_map(s, {1, 0}), Rational(3, 10), Rational(1, 10)).holds);
  CHECK_THROWS_AS(check_kannan(s, SelfMap::identity(s.image_ptr()), -1, 0), std::invalid_argument);
}

TEST_CASE("quasi and ciric examples") {
  auto s = line(2);
  auto flip = table_map(s, {1, 0});
  CHECK(check_quasi(s, SelfMap::constant(s.image_ptr(), {1}), 0).holds);
  CHECK_FALSE(check_quasi(s, SelfMap::identity(s.image_ptr()), Rational(99, 100)).holds);
  CHECK_FALSE(check_quasi(s, flip, Rational(9, 10)).holds);
  CHECK(check_ciric5(s, SelfMap::constant(s.image_ptr(), {0}), Rational(1, 3)).holds);
  auto c = check_ciric5(s, flip, Rational(9, 10));
  CHECK_FALSE(c.holds);
  CHECK(c.minimal_constant->value == Ratio(1));
  CHECK_THROWS_AS(check_quasi(s, flip, 1), std::invalid_argument);
}

TEST_CASE("pair domination examples") {
  auto s = line(3);
  auto h = SelfMap::constant(s.image_ptr(), {2});
  auto g = table_map(s, {1, 0, 1});
  auto r = check_pair_domination(s, g, h, Rational(1, 4));
  CHECK(r.inequality.holds);
  CHECK_FALSE(r.range_included);
  auto same = check_pair_domination(s, g, g, Rational(1, 2));
  CHECK_FALSE(same.inequality.holds);
  CHECK(same.range_included);
}

TEST_CASE("sum domination examples") {
  auto s = line(2);
  auto c0 = SelfMap::constant(s.image_ptr(), {0});
  auto c1 = SelfMap::constant(s.image_ptr(), {1});
  auto id = SelfMap::identity(s.image_ptr());
  auto both = check_saluja(s, c0, c1, Rational(1, 2));
  CHECK(both.inequality.holds);
  CHECK(both.both_constant);
  CHECK_FALSE(check_saluja(s, c0, id, Rational(9, 10)).inequality.holds);
  CHECK_FALSE(check_saluja(s, id, id, Rational(9, 10)).inequality.holds);
}

TEST_CASE("rational condition undefined pairs") {
  auto s = line(3);
  auto id = SelfMap::identity(s.image_ptr());
  auto r = parv_rational_check(s, id, id);
  CHECK(r.ill_defined());
  for (const auto& p : s.image().points())
    CHECK(std::find(r.undefined_pairs.begin(), r.undefined_pairs.end(), std::make_pair(p, p)) != r.undefined_pairs.end());
  auto c = SelfMap::constant(s.image_ptr(), {1});
  auto rc = parv_rational_check(s, c, c);
  CHECK(std::find(rc.undefined_pairs.begin(), rc.undefined_pairs.end(), std::make_pair(Point{1}, Point{1})) !=
        rc.undefined_pairs.end());

  auto two = line(2);
  auto flip = table_map(two, {1, 0});
  auto mixed = parv_rational_check(two, SelfMap::identity(two.image_ptr()), flip);
  CHECK(std::find(mixed.undefined_pairs.begin(), mixed.undefined_pairs.end(), std::make_pair(Point{0}, Point{0})) ==
        mixed.undefined_pairs.end());
}

TEST_CASE("weak commutativity and compatibility") {
  auto s = line(2);
  auto id = SelfMap::identity(s.image_ptr());
  auto flip = table_map(s, {1, 0});
  auto c0 = SelfMap::constant(s.image_ptr(), {0});
  auto c1 = SelfMap::constant(s.image_ptr(), {1});
  CHECK(weakly_commutative(s, flip, flip).holds);
  CHECK(weakly_commutative(s, c0, c1).holds);
  CHECK(weakly_commutative(s, id, flip).holds);
  CHECK(compatible(s, flip, flip).holds);
  CHECK(compatible(s, id, id).holds);
  auto v = compatible(s, c1, flip);
  CHECK_FALSE(v.holds);
  CHECK(v.witness == Point{0});
}

TEST_CASE("property: conditions agree with direct rational evaluation on intervals") {
  const std::vector<Rational> grid{0, Rational(1, 8), Rational(1, 4), Rational(3, 8), Rational(1, 2), Rational(3, 4)};
  for (std::int64_t n = 1; n <= 4; ++n) {
    auto s = line(n);
    for (const auto& f : enumerate_maps(s.image_ptr())) {
      REQUIRE(lipschitz_min(s, f) == Ratio(lipschitz_oracle(f)));
      for (const auto& r : grid) {
        const bool q = check_quasi(s, f, r).holds;
        REQUIRE(q == quasi_oracle(f, r));
        REQUIRE(check_ciric5(s, f, r).holds == ciric_oracle(f, r));
        if (q) REQUIRE(check_ciric5(s, f, r).holds);
        REQUIRE(check_banach(s, f, Ratio(r)).holds == (lipschitz_oracle(f) <= r));
      }
      for (const auto& a : grid)
        for (const auto& b : grid) REQUIRE(check_kannan(s, f, a, b).holds == kannan_oracle(f, a, b));
    }
  }
}

TEST_CASE("property: minimal constants are tight") {
  const std::vector<Rational> grid{0, Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(9, 10)};
  std::vector<DigitalMetricSpace> spaces;
  for (const auto& m : {MetricSpec::lp(1), MetricSpec::lp(2), MetricSpec::shortest_path()}) {
    spaces.emplace_back(digitop::grid(2, 2, Adjacency(2)), m);
    spaces.emplace_back(digital_interval(0, 2), m);
  }
  for (const auto& s : spaces)
    for (const auto& f : enumerate_maps(s.image_ptr())) {
      for (const auto& r : grid) {
        for (const auto& rep : {check_quasi(s, f, r), check_ciric5(s, f, r)}) {
          REQUIRE(rep.minimal_constant);
          if (rep.minimal_constant->possible())
            REQUIRE(rep.holds == (Ratio(r) >= rep.minimal_constant->value));
          else
            REQUIRE_FALSE(rep.holds);
        }
        auto k = check_kannan(s, f, r, Rational(1, 8));
        REQUIRE(k.minimal_constant);
        if (k.minimal_constant->possible())
          REQUIRE(k.holds == (k.minimal_constant->value <= Ratio(1)));
        else
          REQUIRE_FALSE(k.holds);
        REQUIRE(check_banach(s, f, Ratio(r)).holds == (Ratio(r) >= lipschitz_min(s, f)));
      }
    }
}

TEST_CASE("property: a common fixed point always yields an undefined pair") {
  for (std::int64_t n = 1; n <= 3; ++n) {
    auto s = line(n);
    const auto maps = enumerate_maps(s.image_ptr());
    for (const auto& t : maps)
      for (const auto& u : maps)
        for (std::size_t x = 0; x < t.size(); ++x)
          if (t(x) == x && u(x) == x) {
            auto r = parv_rational_check(s, t, u);
            const Point& p = s.image().point(x);
            REQUIRE(std::find(r.undefined_pairs.begin(), r.undefined_pairs.end(), std::make_pair(p, p)) !=
                    r.undefined_pairs.end());
          }
  }
}
