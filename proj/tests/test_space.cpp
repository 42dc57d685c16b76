#include <doctest.h>

#include <algorithm>
#include <set>

#include "digitop/space.hpp"

using namespace digitop;

TEST_CASE("c_u adjacency") {
  CHECK_FALSE(adjacent({0, 0}, {1, 1}, Adjacency(1)));
  CHECK(adjacent({0, 0}, {1, 1}, Adjacency(2)));
  CHECK_FALSE(adjacent({0, 0}, {0, 2}, Adjacency(2)));
  CHECK(adjacent({0, 0}, {0, 1}, Adjacency(1)));
  CHECK_FALSE(adjacent({3}, {3}, Adjacency(1)));
  CHECK_THROWS_AS(adjacent({0}, {0, 1}, Adjacency(1)), std::invalid_argument);
  CHECK_THROWS_AS(adjacent({0}, {1}, Adjacency(2)), std::invalid_argument);
  CHECK_THROWS_AS(Adjacency(0), std::invalid_argument);
}

TEST_CASE("images validate and sort their points") {
  DigitalImage img({{2}, {0}, {1}}, Adjacency(1));
  CHECK(img.point(0) == Point{0});
  CHECK(img.index_of({2}) == 2u);
  CHECK_FALSE(img.contains({5}));
  CHECK_THROWS_AS(img.require_index({5}), std::out_of_range);
  CHECK_THROWS_AS(DigitalImage({}, Adjacency(1)), std::invalid_argument);
  CHECK_THROWS_AS(DigitalImage({{0}, {0}}, Adjacency(1)), std::invalid_argument);
  CHECK_THROWS_AS(DigitalImage({{0}, {0, 1}}, Adjacency(1)), std::invalid_argument);
  CHECK_THROWS_AS(DigitalImage({{0}}, Adjacency(2)), std::invalid_argument);
  CHECK(img.neighbors(1) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("components") {
  CHECK(components(digital_interval(0, 2)).size() == 1);
  DigitalImage gap({{0}, {2}}, Adjacency(1));
  CHECK(components(gap).size() == 2);
  CHECK_FALSE(gap.is_connected());
  DigitalImage diagonal({{0, 0}, {1, 1}}, Adjacency(2));
  CHECK(components(diagonal).size() == 1);
  DigitalImage diagonal_c1({{0, 0}, {1, 1}}, Adjacency(1));
  CHECK(components(diagonal_c1).size() == 2);
}

TEST_CASE("paths") {
  auto img = digital_interval(0, 2);
  std::vector<Point> walk{{0}, {1}, {2}};
  auto r = is_path(img, walk);
  CHECK(r.is_path);
  CHECK(r.length == 2);
  std::vector<Point> single{{0}};
  CHECK(is_path(img, single).length == 0);
  std::vector<Point> jump{{0}, {2}};
  auto bad = is_path(img, jump);
  CHECK_FALSE(bad.is_path);
  CHECK(bad.bad_index == 0u);
  CHECK_THROWS_AS(is_path(img, std::vector<Point>{}), std::invalid_argument);
  CHECK_THROWS_AS(is_path(img, std::vector<Point>{{7}}), std::out_of_range);
}

TEST_CASE("intervals and grids") {
  CHECK(digital_interval(0, 1).size() == 2);
  CHECK(digital_interval(3, 3).size() == 1);
  CHECK(digital_interval(3, 3).point(0) == Point{3});
  CHECK(digital_interval(0, 3).is_connected());
  CHECK_THROWS_AS(digital_interval(2, 1), std::invalid_argument);
  auto g = grid(3, 2, Adjacency(1));
  CHECK(g.size() == 6);
  CHECK(g.is_connected());
  CHECK(g.neighbors(g.require_index({1, 0})).size() == 3);
  CHECK(grid(3, 2, Adjacency(2)).neighbors(grid(3, 2, Adjacency(2)).require_index({1, 0})).size() == 5);
}

namespace {

// Components by transitive closure of the adjacency relation (Warshall).
std::set<std::set<Point>> closure_components(const std::vector<Point>& pts, Adjacency adj) {
  const std::size_t n = pts.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = i == j || adjacent(pts[i], pts[j], adj);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  std::set<std::set<Point>> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<Point> block;
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j]) block.insert(pts[j]);
    out.insert(block);
  }
  return out;
}

}  // namespace

TEST_CASE("property: components match transitive closure on every subset of a 3x3 window") {
  std::vector<Point> cells;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) cells.push_back({x, y});
  for (int u : {1, 2}) {
    for (unsigned mask = 1; mask < (1u << cells.size()); ++mask) {
      std::vector<Point> subset;
      for (std::size_t i = 0; i < cells.size(); ++i)
        if (mask & (1u << i)) subset.push_back(cells[i]);
      DigitalImage img(subset, Adjacency(u));
      std::set<std::set<Point>> got;
      for (const auto& block : components(img)) got.insert(std::set<Point>(block.begin(), block.end()));
      REQUIRE(got == closure_components(subset, Adjacency(u)));
      REQUIRE(img.is_connected() == (got.size() == 1));
    }
  }
}

TEST_CASE("property: adjacency is symmetric and irreflexive in Z^3") {
  std::vector<Point> cube;
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y)
      for (int z = -1; z <= 1; ++z) cube.push_back({x, y, z});
  for (int u = 1; u <= 3; ++u) {
    for (const auto& a : cube) {
      REQUIRE_FALSE(adjacent(a, a, Adjacency(u)));
      for (const auto& b : cube) REQUIRE(adjacent(a, b, Adjacency(u)) == adjacent(b, a, Adjacency(u)));
    }
    // The origin has the classical 6 / 18 / 26 neighbours.
    const Point origin{0, 0, 0};
    auto count = std::count_if(cube.begin(), cube.end(), [&](const Point& p) { return adjacent(origin, p, Adjacency(u)); });
    CHECK(count == std::vector<long>{6, 18, 26}[u - 1]);
  }
}
